#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "distspec/census.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"
#include "distspec/spectral.hpp"
#include "json.hpp"

using namespace dspec;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q.get_num().get_str();
  if (q.get_den() != 1) os << "/" << q.get_den().get_str();
  return os.str();
}

Json spectrum_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s.entries) {
    Json row;
    if (e.exact)
      row["root"] = rational_str(e.root);
    else
      row["root"] = Json::array({rational_str(e.lo), rational_str(e.hi)});
    row["approx"] = round4(e.approx);
    row["mult"] = e.mult;
    arr.push_back(std::move(row));
  }
  return arr;
}

// Graphs from --input (path or "-" for stdin) or a positional graph6 string.
std::vector<Graph> load_graphs(const std::string& input, const std::string& inline_g6, int order) {
  std::vector<Graph> graphs;
  if (order > 0) {
    auto gen = enumerate_connected(order);
    graphs.insert(graphs.end(), gen.begin(), gen.end());
  }
  if (!inline_g6.empty()) graphs.push_back(parse_graph6(inline_g6));
  if (!input.empty()) {
    if (input == "-") {
      auto read = read_graph6_lines(std::cin);
      graphs.insert(graphs.end(), read.begin(), read.end());
    } else {
      std::ifstream in(input);
      if (!in) throw std::runtime_error("cannot open input file: " + input);
      auto read = read_graph6_lines(in);
      graphs.insert(graphs.end(), read.begin(), read.end());
    }
  }
  return graphs;
}

void print_report(const Json& report, bool json_format, const std::string& summary) {
  if (json_format)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << summary;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-spectrum toolkit: exact spectra, family recognition and census verification for connected graphs"};
  app.require_subcommand(1);

  std::string input, format = "text", inline_arg;
  int jobs = 1, order = 0, max_param = 3;

  auto add_common = [&](CLI::App* cmd, bool with_order) {
    cmd->add_option("--input", input, "graph6 input path, or - for stdin");
    cmd->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--jobs", jobs, "worker threads (default 1, bit-reproducible)")
        ->check(CLI::PositiveNumber);
    if (with_order)
      cmd->add_option("--order", order, "also run the built-in enumerator for this order (<= 6)")
          ->check(CLI::Range(1, 6));
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact distance spectrum of each input graph");
  spectrum_cmd->add_option("graph6", inline_arg, "inline graph6 string");
  add_common(spectrum_cmd, true);

  auto* classify_cmd = app.add_subcommand("classify", "threshold predicates, eigenvalue bucket and family of each input graph");
  classify_cmd->add_option("graph6", inline_arg, "inline graph6 string");
  add_common(classify_cmd, true);

  auto* build_cmd = app.add_subcommand("build", "graph6 of a family descriptor, e.g. I5[2,3]");
  std::string descriptor;
  build_cmd->add_option("descriptor", descriptor, "family descriptor")->required();

  auto* census_cmd = app.add_subcommand("census", "verify the characterization theorems over input graphs");
  add_common(census_cmd, true);

  auto* tables_cmd = app.add_subcommand("verify-tables", "verify the published eigenvalue tables and polynomial identities");
  tables_cmd->add_option("--max-param", max_param, "parameter bound for the polynomial identities")
      ->check(CLI::Range(2, 8));
  add_common(tables_cmd, false);

  auto* cospectral_cmd = app.add_subcommand("cospectral", "search admissible family members of one order for cospectral pairs");
  int cs_order = 0;
  cospectral_cmd->add_option("--order", cs_order, "total graph order to search")->required();
  add_common(cospectral_cmd, false);

  auto* fixtures_cmd = app.add_subcommand("recover-fixtures", "recover the forbidden-subgraph fixtures by spectral fingerprint");
  add_common(fixtures_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  bool json_format = format == "json";
  try {
    if (spectrum_cmd->parsed() || classify_cmd->parsed()) {
      bool classify = classify_cmd->parsed();
      auto graphs = load_graphs(input, inline_arg, order);
      if (graphs.empty()) {
        std::cerr << "no input graphs (use --input, --order or an inline graph6 string)\n";
        return kExitUsage;
      }
      Json arr = Json::array();
      std::ostringstream text;
      int item_errors = 0;
      for (const Graph& g : graphs) {
        Json row;
        std::string g6 = write_graph6(g);
        row["graph6"] = g6;
        if (!is_connected(g)) {
          ++item_errors;
          row["error"] = "not connected";
          text << g6 << "  error: not connected\n";
          arr.push_back(std::move(row));
          continue;
        }
        if (classify) {
          bool p1 = g.order() >= 3 ? third_largest_le_minus1(g) : false;
          bool p2 = second_least_ge_minus2(g);
          auto fam = recognize(g);
          EigenBucket bucket = classify_eigencount(g);
          row["third_largest_le_minus1"] = p1;
          row["second_least_ge_minus2"] = p2;
          row["bucket"] = bucket_name(bucket);
          row["descriptor"] = fam ? to_string(*fam) : "none";
          text << g6 << "  predicates=(" << (p1 ? "true" : "false") << ","
               << (p2 ? "true" : "false") << ")  bucket=" << bucket_name(bucket)
               << "  descriptor=" << (fam ? to_string(*fam) : "none") << "\n";
        } else {
          Spectrum s = spectrum(g);
          row["spectrum"] = spectrum_json(s);
          text << g6 << "  [";
          for (size_t i = 0; i < s.entries.size(); ++i) {
            if (i) text << ", ";
            text << fmt4(s.entries[i].approx);
            if (s.entries[i].mult > 1) text << "^" << s.entries[i].mult;
          }
          text << "]\n";
        }
        arr.push_back(std::move(row));
      }
      print_report(arr, json_format, text.str());
      return item_errors ? kExitDisagreement : kExitPass;
    }

    if (build_cmd->parsed()) {
      std::cout << write_graph6(build(parse_descriptor(descriptor))) << "\n";
      return kExitPass;
    }

    if (census_cmd->parsed()) {
      auto graphs = load_graphs(input, "", order);
      if (graphs.empty()) {
        std::cerr << "no input graphs (use --input or --order)\n";
        return kExitUsage;
      }
      auto s31 = verify_theorem31(graphs, jobs);
      auto s41 = verify_theorem41(graphs, jobs);
      auto s42 = verify_theorem42(graphs, jobs);
      Json report;
      report["scope"] = {{"graphs", static_cast<int>(graphs.size())},
                         {"source", input.empty() ? "builtin" : input},
                         {"order", order}};
      report["theorem31"] = section_json(s31);
      report["theorem41"] = section_json(s41);
      report["theorem42"] = section_json(s42);
      std::ostringstream text;
      for (const auto* s : {&s31, &s41, &s42})
        text << s->theorem << ": checked=" << s->checked << " skipped=" << s->skipped_small
             << " errors=" << s->errors << " disagreements=" << s->disagreements.size() << "\n";
      print_report(report, json_format, text.str());
      bool ok = s31.pass() && s41.pass() && s42.pass() &&
                s31.errors + s41.errors + s42.errors == 0;
      return ok ? kExitPass : kExitDisagreement;
    }

    if (tables_cmd->parsed()) {
      auto t1 = verify_table1();
      auto t2 = verify_table2();
      auto t3 = verify_table3(max_param, max_param, jobs);
      Json report;
      report["tables"] = {{"table1", table_json(t1)}, {"table2", table_json(t2)}, {"table3", table_json(t3)}};
      std::ostringstream text;
      bool all = true;
      for (auto [name, rows] : {std::pair{"table1", &t1}, {"table2", &t2}, {"table3", &t3}}) {
        int pass = 0;
        for (const auto& r : *rows) pass += r.pass;
        all = all && pass == static_cast<int>(rows->size());
        text << name << ": " << pass << "/" << rows->size() << " rows pass\n";
        for (const auto& r : *rows)
          if (!r.pass)
            text << "  FAIL " << r.label << " computed=" << fmt4(r.computed)
                 << " expected=" << fmt4(r.expected) << " " << r.note << "\n";
      }
      print_report(report, json_format, text.str());
      return all ? kExitPass : kExitDisagreement;
    }

    if (cospectral_cmd->parsed()) {
      auto members = enumerate_members(cs_order, TheoremSet::thm31);
      auto pairs = cospectral_search(members, jobs);
      Json report;
      report["cospectral"] = cospectral_json(pairs);
      std::ostringstream text;
      text << "descriptors=" << members.size() << " cospectral pairs=" << pairs.size() << "\n";
      for (const auto& p : pairs) text << "  " << p.first << " ~ " << p.second << "\n";
      print_report(report, json_format, text.str());
      return kExitPass;
    }

    if (fixtures_cmd->parsed()) {
      auto recs = recover_forbidden_fixtures();
      Json report;
      report["fixtures"] = fixtures_json(recs);
      std::ostringstream text;
      bool all_unique = true;
      for (const auto& r : recs) {
        all_unique = all_unique && r.unique();
        text << r.label << " (" << fmt4(r.value) << "): ";
        if (r.candidates.empty())
          text << "NO MATCH\n";
        else {
          for (size_t i = 0; i < r.candidates.size(); ++i) text << (i ? " " : "") << r.candidates[i];
          text << (r.unique() ? "" : "  AMBIGUOUS") << "\n";
        }
      }
      print_report(report, json_format, text.str());
      return all_unique ? kExitPass : kExitDisagreement;
    }
  } catch (const Graph6Error& e) {
    std::cerr << "graph6 parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  }
  return kExitUsage;
}
