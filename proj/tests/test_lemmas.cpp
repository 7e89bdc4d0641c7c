#include <fstream>
#include <random>

#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"
#include "distspec/jacobi.hpp"
#include "distspec/spectral.hpp"
#include "distspec/sturm.hpp"
#include "doctest.h"

using namespace dspec;

namespace {

std::vector<Graph> census_including7() {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 6; ++n) {
    auto g = enumerate_connected(n);
    graphs.insert(graphs.end(), g.begin(), g.end());
  }
  std::ifstream in(std::string(DISTSPEC_TEST_DATA) + "/connected7.g6");
  auto g7 = read_graph6_lines(in);
  graphs.insert(graphs.end(), g7.begin(), g7.end());
  return graphs;
}

// complement decomposes into cliques <=> complete multipartite
bool is_complete_multipartite(const Graph& g, int* parts = nullptr) {
  Graph c = complement(g);
  std::vector<int> comp(c.order(), -1);
  int k = 0;
  for (int v = 0; v < c.order(); ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = k;
    std::vector<int> members;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int w = 0; w < c.order(); ++w)
        if (c.adjacent(u, w) && comp[w] < 0) {
          comp[w] = k;
          stack.push_back(w);
        }
    }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (!c.adjacent(members[i], members[j])) return false;
    ++k;
  }
  if (parts) *parts = k;
  return true;
}

bool is_complete_graph(const Graph& g) {
  return g.edge_count() == static_cast<size_t>(g.order()) * (g.order() - 1) / 2;
}

}  // namespace

TEST_CASE("Lemma 2.1: least eigenvalue <= -diameter, equality iff complete multipartite") {
  for (const Graph& g : census_including7()) {
    IntMatrix d = to_int_matrix(all_pairs_distances(g));
    int diam = diameter(g);
    Rational t(-diam);
    int below = count_eigen_with_multiplicity(d, Side::less, t);
    int at = eigen_multiplicity(d, t);
    CHECK(below + at >= 1);  // least eigenvalue <= -d(G)
    bool equality = below == 0 && at >= 1;
    CHECK(equality == is_complete_multipartite(g));
  }
}

TEST_CASE("Lemma 2.2: least eigenvalue -2 with multiplicity n-k iff complete k-partite") {
  for (const Graph& g : census_including7()) {
    if (g.order() < 2) continue;
    IntMatrix d = to_int_matrix(all_pairs_distances(g));
    int below = count_eigen_with_multiplicity(d, Side::less, Rational(-2));
    int at = multiplicity_at(g, -2);
    bool spectral = below == 0 && at >= 1;  // least eigenvalue exactly -2
    int k = 0;
    bool multipartite = is_complete_multipartite(g, &k) && !is_complete_graph(g);
    CHECK(spectral == multipartite);
    if (multipartite) CHECK(at == g.order() - k);
  }
}

TEST_CASE("Lemma 2.3: for n >= 4, second least <= -1 with equality iff K_r v (K_s u K_t)") {
  for (const Graph& g : census_including7()) {
    int n = g.order();
    if (n < 4) continue;
    IntMatrix d = to_int_matrix(all_pairs_distances(g));
    int above = count_eigen_with_multiplicity(d, Side::greater, Rational(-1));
    CHECK(above <= n - 2);  // partial_{n-1} <= -1
    int below = count_eigen_with_multiplicity(d, Side::less, Rational(-1));
    int at = multiplicity_at(g, -1);
    bool equality = below <= 1 && below + at >= 2;  // partial_{n-1} = -1
    // K_r v (K_s u K_t); when s = t = 1 the union is K_2^c and the twin
    // quotient collapses to the I2 shape with b = 2
    bool structural = false;
    for (const auto& fd : recognize_all(g))
      structural = structural || fd.id == FamilyId::KJOIN ||
                   (fd.id == FamilyId::I2 && fd.params[1] == 2);
    CHECK(equality == structural);
  }
}

TEST_CASE("Lemma 2.6: second largest < 1 - sqrt(3) iff complete") {
  for (const Graph& g : census_including7()) {
    if (g.order() < 2) continue;
    CHECK(second_largest_below_1_minus_sqrt3(g) == is_complete_graph(g));
  }
}

TEST_CASE("Lemma 2.7: twin classes force -1/-2 multiplicities (200 random products)") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> base_order(2, 4), part_size(1, 3);
  std::bernoulli_distribution clique(0.5), edge(0.6);
  int done = 0;
  while (done < 200) {
    int bn = base_order(rng);
    Graph base(bn);
    for (int u = 0; u < bn; ++u)
      for (int v = u + 1; v < bn; ++v)
        if (edge(rng)) base.add_edge(u, v);
    if (!is_connected(base)) continue;
    std::vector<Graph> parts;
    int clique_bound = 0, indep_bound = 0, total = 0;
    for (int i = 0; i < bn; ++i) {
      int sz = part_size(rng);
      total += sz;
      if (clique(rng)) {
        parts.push_back(complete(sz));
        if (sz >= 2) clique_bound += sz - 1;
      } else {
        parts.push_back(edgeless(sz));
        if (sz >= 2) indep_bound += sz - 1;
      }
    }
    if (total > 12) continue;
    Graph g = glex_product(base, parts);
    // independent parts whose base vertex is isolated-adjacent... base is
    // connected, so every part has an outside neighbor and the twin vectors
    // apply verbatim
    CHECK(multiplicity_at(g, -1) >= clique_bound);
    CHECK(multiplicity_at(g, -2) >= indep_bound);
    ++done;
  }
}

TEST_CASE("Lemma 2.8: divisor polynomial divides and shares the largest eigenvalue") {
  std::vector<FamilyId> ids{FamilyId::I1, FamilyId::I2, FamilyId::I3, FamilyId::I4, FamilyId::I5,
                            FamilyId::I6, FamilyId::I7, FamilyId::J1, FamilyId::J2, FamilyId::J3,
                            FamilyId::J4, FamilyId::J5, FamilyId::J6, FamilyId::J7};
  int instances = 0;
  for (FamilyId id : ids) {
    int arity = family_arity(id);
    std::vector<int> p(arity, 1);
    for (;;) {
      FamilyDescriptor d{id, p};
      if (structurally_valid(d)) {
        ++instances;
        Graph g = build(d);
        // the defining expression's part structure as a vertex partition
        std::vector<std::vector<int>> blocks;
        int off = 0;
        for (int sz : p) {
          std::vector<int> b(sz);
          for (int i = 0; i < sz; ++i) b[i] = off + i;
          blocks.push_back(std::move(b));
          off += sz;
        }
        Partition part(g.order(), std::move(blocks));
        auto bm = check_equitable(g, part);
        REQUIRE_MESSAGE(bm.has_value(), to_string(d));
        IntPoly phi = distance_char_poly(g);
        IntPoly psi = char_poly_exact(*bm);
        CHECK_MESSAGE(divide_exact(phi, psi).has_value(), to_string(d));
        double top_g = spectrum(g).entries.front().approx;
        double top_b = spectrum_of_matrix(*bm).entries.front().approx;
        CHECK_MESSAGE(std::abs(top_g - top_b) < 1e-8, to_string(d));
      }
      int i = arity - 1;
      while (i >= 0 && p[i] == 4) p[i--] = 1;
      if (i < 0) break;
      ++p[i];
    }
  }
  CHECK(instances > 1500);
}

TEST_CASE("Lemma 2.5 consequence: diameter-2 induced subgraph eigenvalues interlace") {
  // spot check: F6 = K_{2,2,1} inside K_{2,2,2}
  Graph big = join(edgeless(2), join(edgeless(2), edgeless(2)));
  std::vector<int> X{0, 1, 2, 3, 4};
  Graph sub = induced_subgraph(big, X);
  auto lam = approx_eigenvalues(to_int_matrix(all_pairs_distances(big)));
  auto mu = approx_eigenvalues(to_int_matrix(all_pairs_distances(sub)));
  for (size_t i = 0; i < mu.size(); ++i) {
    CHECK(lam[i] >= mu[i] - 1e-8);
    CHECK(mu[i] >= lam[i + 1] - 1e-8);
  }
}

TEST_CASE("J7 equality members have exactly n-3 eigenvalues in {-1,-2}") {
  // smallest sigma = 0 solution: J7[5,7,7,5] of order 24
  FamilyDescriptor d{FamilyId::J7, {5, 7, 7, 5}};
  REQUIRE(j7_constraint(d.params) == 0);
  Graph g = build(d);
  CHECK(multiplicity_at(g, -1) + multiplicity_at(g, -2) == g.order() - 3);
  // the Remark-1 cospectral pair has sigma = -132, not 0, and sits in the
  // n-4 bucket; what the source claims for it is cospectrality, tested in
  // test_spectral
  CHECK(j7_constraint({1, 1, 3, 9}) == -132);
  Graph r1 = build({FamilyId::J7, {1, 1, 3, 9}});
  CHECK(multiplicity_at(r1, -1) + multiplicity_at(r1, -2) == r1.order() - 4);
}
