#include "distspec/census.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdio>
#include <map>
#include <sstream>

#include "distspec/enumerate.hpp"
#include "distspec/fixtures.hpp"
#include "distspec/graph6.hpp"
#include "distspec/jacobi.hpp"
#include "distspec/spectral.hpp"
#include "distspec/sturm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dspec {

namespace {

// Index-parallel map with deterministic assembly. jobs <= 1 is the serial
// reference path.
template <typename F>
void parallel_for(int count, int jobs, F&& body) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int i = 0; i < count; ++i) body(i);
#else
  for (int i = 0; i < count; ++i) body(i);
#endif
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct ItemResult {
  bool skipped = false;
  bool error = false;
  std::optional<Disagreement> disagreement;
};

TheoremSection collect(const char* name, const std::vector<Graph>& graphs, int jobs, int min_order,
                       const std::function<std::optional<std::string>(const Graph&)>& check) {
  TheoremSection sec;
  sec.theorem = name;
  std::vector<ItemResult> results(graphs.size());
  parallel_for(static_cast<int>(graphs.size()), jobs, [&](int i) {
    const Graph& g = graphs[i];
    if (!is_connected(g)) {
      results[i].error = true;
      return;
    }
    if (g.order() < min_order) {
      results[i].skipped = true;
      return;
    }
    try {
      auto bad = check(g);
      if (bad) results[i].disagreement = Disagreement{write_graph6(g), *bad};
    } catch (const std::exception& e) {
      results[i].disagreement = Disagreement{write_graph6(g), std::string("exception: ") + e.what()};
    }
  });
  for (const auto& r : results) {
    if (r.error) {
      ++sec.errors;
    } else if (r.skipped) {
      ++sec.skipped_small;
    } else {
      ++sec.checked;
      if (r.disagreement) sec.disagreements.push_back(*r.disagreement);
    }
  }
  return sec;
}

}  // namespace

TheoremSection verify_theorem31(const std::vector<Graph>& graphs, int jobs) {
  return collect("theorem31", graphs, jobs, 4, [](const Graph& g) -> std::optional<std::string> {
    bool spectral = third_largest_le_minus1(g) && second_least_ge_minus2(g);
    auto fd = recognize(g);
    bool structural = fd && thm31_admissible(*fd);
    if (spectral == structural) return std::nullopt;
    std::ostringstream os;
    os << "spectral=" << (spectral ? "true" : "false")
       << " structural=" << (structural ? "true" : "false") << " recognized="
       << (fd ? to_string(*fd) : std::string("none"));
    return os.str();
  });
}

TheoremSection verify_theorem41(const std::vector<Graph>& graphs, int jobs) {
  return collect("theorem41", graphs, jobs, 4, [](const Graph& g) -> std::optional<std::string> {
    EigenBucket bucket = classify_eigencount(g);
    // m = n-1 exactly for complete graphs; m = n-2 exactly for the theorem's
    // two families
    bool complete_structural = g.edge_count() == static_cast<size_t>(g.order()) * (g.order() - 1) / 2;
    if ((bucket == EigenBucket::n_minus_1) != complete_structural)
      return "bucket " + std::string(bucket_name(bucket)) + " vs complete=" +
             (complete_structural ? "true" : "false");
    bool member = thm41_member(g);
    if ((bucket == EigenBucket::n_minus_2) != member)
      return "bucket " + std::string(bucket_name(bucket)) + " vs thm41-family=" +
             (member ? "true" : "false");
    return std::nullopt;
  });
}

TheoremSection verify_theorem42(const std::vector<Graph>& graphs, int jobs) {
  return collect("theorem42", graphs, jobs, 5, [](const Graph& g) -> std::optional<std::string> {
    EigenBucket bucket = classify_eigencount(g);
    bool member = thm42_member(g);
    if ((bucket == EigenBucket::n_minus_3) != member)
      return "bucket " + std::string(bucket_name(bucket)) + " vs thm42-family=" +
             (member ? "true" : "false");
    return std::nullopt;
  });
}

std::vector<TableRow> verify_table1() {
  std::vector<TableRow> rows;
  for (const auto& fx : lemma32_matrices()) {
    TableRow row;
    row.label = fx.label;
    row.expected = fx.expected;
    auto ev = approx_eigenvalues(fx.matrix);
    double d3 = ev[2];
    double d5 = ev[4];
    int n = fx.matrix.order();
    bool a12_rule = fx.label == "A12";  // suspected row-label typo: accept either statistic
    double primary = fx.which == 3 ? d3 : d5;
    row.computed = primary;
    int matched_which = fx.which;
    bool value_ok = std::fabs(primary - fx.expected) <= 1e-4;
    if (!value_ok && a12_rule) {
      double alt = fx.which == 3 ? d5 : d3;
      if (std::fabs(alt - fx.expected) <= 1e-4) {
        value_ok = true;
        matched_which = fx.which == 3 ? 5 : 3;
        row.computed = alt;
      }
    }
    // disqualifying inequality, decided exactly: d3 > -1 or d5 < -2
    IntMatrix m = fx.matrix;
    bool disqualifies =
        matched_which == 3
            ? count_eigen_with_multiplicity(m, Side::greater, Rational(-1)) >= 3
            : count_eigen_with_multiplicity(m, Side::less, Rational(-2)) >= n - 4;
    row.pass = value_ok && disqualifies;
    std::ostringstream os;
    os << "matched=d" << matched_which << " d3=" << fmt4(d3) << " d5=" << fmt4(d5)
       << " exact_violation=" << (disqualifies ? "true" : "false");
    row.note = os.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> verify_table2() {
  std::vector<TableRow> rows;
  for (const auto& r : table2_rows()) {
    IntMatrix m = table2_matrix(r);
    auto ev = approx_eigenvalues(m);
    TableRow row;
    std::ostringstream label;
    label << "(" << r.d1 << "," << r.d2 << "," << r.d3 << "," << r.d4 << ")";
    row.label = label.str();
    row.expected = r.expected;
    row.computed = ev[3];
    bool value_ok = std::fabs(row.computed - r.expected) <= 1e-4;
    // partial_4 < -2 exactly: at least two eigenvalues below -2
    bool below = count_eigen_with_multiplicity(m, Side::less, Rational(-2)) >= 2;
    row.pass = value_ok && below;
    row.note = std::string("exact_d4_below_minus2=") + (below ? "true" : "false");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> verify_table3(int max_param_i, int max_param_j, int jobs) {
  struct Tuple {
    FamilyDescriptor fd;
  };
  std::vector<Tuple> work;
  auto add_tuples = [&](FamilyId id, int max_param) {
    int arity = family_arity(id);
    std::vector<int> p(arity, 1);
    for (;;) {
      FamilyDescriptor fd{id, p};
      if (structurally_valid(fd)) work.push_back({fd});
      int i = arity - 1;
      while (i >= 0 && p[i] == max_param) p[i--] = 1;
      if (i < 0) break;
      ++p[i];
    }
  };
  for (FamilyId id : {FamilyId::I1, FamilyId::I2, FamilyId::I3, FamilyId::I4, FamilyId::I5,
                      FamilyId::I6, FamilyId::I7})
    add_tuples(id, std::max(max_param_i, id == FamilyId::I1 ? 4 : max_param_i));
  for (FamilyId id : {FamilyId::J1, FamilyId::J2, FamilyId::J3, FamilyId::J4, FamilyId::J5,
                      FamilyId::J6, FamilyId::J7})
    add_tuples(id, max_param_j);

  std::vector<TableRow> rows(work.size());
  parallel_for(static_cast<int>(work.size()), jobs, [&](int i) {
    const auto& fd = work[i].fd;
    TableRow row;
    row.label = to_string(fd);
    IntPoly computed = distance_char_poly(build(fd));
    IntPoly formula = table3_phi(fd);
    row.pass = computed == formula;
    row.note = row.pass ? "exact match" : "computed " + computed.to_string() + " vs formula " +
                                              formula.to_string();
    rows[i] = std::move(row);
  });
  return rows;
}

std::vector<FixtureRecovery> recover_forbidden_fixtures() {
  std::vector<FixtureRecovery> out;
  Graph k221 = join(join(edgeless(2), edgeless(2)), complete(1));
  std::map<int, std::vector<Graph>> census;
  for (const auto& fp : fig2_fingerprints())
    if (!census.count(fp.order)) census[fp.order] = enumerate_connected(fp.order);
  for (const auto& fp : fig2_fingerprints()) {
    FixtureRecovery rec;
    rec.label = fp.label;
    rec.value = fp.value;
    for (const Graph& g : census[fp.order]) {
      if (diameter(g) != 2) continue;
      auto ev = approx_eigenvalues(to_int_matrix(all_pairs_distances(g)));
      double stat = fp.which == 3 ? ev[2] : ev[4];
      if (std::fabs(stat - fp.value) >= 5e-5) continue;
      if (fp.pinned_k221 && !is_isomorphic(g, k221)) continue;
      rec.candidates.push_back(write_graph6(g));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<TableRow> verify_forbidden(int max_param) {
  auto recovered = recover_forbidden_fixtures();
  std::vector<std::pair<std::string, Graph>> fixtures;
  for (const auto& rec : recovered)
    if (rec.unique()) fixtures.emplace_back(rec.label, parse_graph6(rec.candidates.front()));

  std::vector<FamilyDescriptor> members;
  for (int n = 4; n <= 4 * max_param; ++n) {
    for (auto& fd : enumerate_members(n, TheoremSet::thm31)) {
      bool small = true;
      for (int v : fd.params) small = small && v <= max_param;
      if (small) members.push_back(std::move(fd));
    }
  }

  std::vector<std::pair<FamilyDescriptor, Graph>> built;
  built.reserve(members.size());
  for (const auto& fd : members) built.emplace_back(fd, build(fd));

  std::vector<TableRow> rows;
  for (const auto& [label, fx] : fixtures) {
    TableRow row;
    row.label = label;
    row.pass = true;
    int tested = 0;
    for (const auto& [fd, g] : built) {
      if (g.order() < fx.order()) continue;
      ++tested;
      if (contains_induced(g, fx)) {
        row.pass = false;
        row.note = "embeds in " + to_string(fd);
        break;
      }
    }
    if (row.pass) row.note = "absent from all " + std::to_string(tested) + " members";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CospectralPair> cospectral_search(const std::vector<FamilyDescriptor>& descriptors,
                                              int jobs) {
  struct Item {
    std::string key;
    Graph g;
    std::string name;
  };
  std::vector<Item> items(descriptors.size());
  parallel_for(static_cast<int>(descriptors.size()), jobs, [&](int i) {
    Graph g = build(descriptors[i]);
    IntPoly phi = distance_char_poly(g);
    items[i] = {phi.to_string(), std::move(g), to_string(descriptors[i])};
  });
  std::map<std::string, std::vector<int>> groups;
  for (size_t i = 0; i < items.size(); ++i) groups[items[i].key].push_back(static_cast<int>(i));

  std::vector<CospectralPair> pairs;
  for (const auto& [key, idx] : groups) {
    if (idx.size() < 2) continue;
    // split the polynomial class by isomorphism
    std::vector<int> reps;
    for (int i : idx) {
      bool fresh = true;
      for (int r : reps) {
        if (is_isomorphic(items[i].g, items[r].g)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        for (int r : reps) pairs.push_back({items[r].name, items[i].name, key});
        reps.push_back(i);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const CospectralPair& a, const CospectralPair& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  return pairs;
}

Json section_json(const TheoremSection& s) {
  Json j;
  j["checked"] = s.checked;
  j["skipped_small"] = s.skipped_small;
  j["errors"] = s.errors;
  j["disagreements"] = Json::array();
  for (const auto& d : s.disagreements) j["disagreements"].push_back({{"graph6", d.graph6}, {"detail", d.detail}});
  return j;
}

Json table_json(const std::vector<TableRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["label"] = r.label;
    row["pass"] = r.pass;
    row["computed"] = std::round(r.computed * 1e4) / 1e4;
    row["expected"] = r.expected;
    row["note"] = r.note;
    j.push_back(std::move(row));
  }
  return j;
}

Json fixtures_json(const std::vector<FixtureRecovery>& fixtures) {
  Json j = Json::array();
  for (const auto& f : fixtures) {
    Json row;
    row["label"] = f.label;
    row["value"] = f.value;
    row["candidates"] = f.candidates;
    row["unique"] = f.unique();
    j.push_back(std::move(row));
  }
  return j;
}

Json cospectral_json(const std::vector<CospectralPair>& pairs) {
  Json j = Json::array();
  for (const auto& p : pairs) j.push_back({{"first", p.first}, {"second", p.second}, {"poly", p.poly}});
  return j;
}

}  // namespace dspec
