#include <fstream>

#include "distspec/census.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/graph6.hpp"
#include "doctest.h"

using namespace dspec;

namespace {

std::vector<Graph> census_upto(int nmax) {
  std::vector<Graph> graphs;
  for (int n = 4; n <= nmax; ++n) {
    auto g = enumerate_connected(n);
    graphs.insert(graphs.end(), g.begin(), g.end());
  }
  return graphs;
}

}  // namespace

TEST_CASE("theorem 3.1 census has zero disagreements for n = 4, 5") {
  auto graphs = census_upto(5);
  auto sec = verify_theorem31(graphs);
  CHECK(sec.checked == 27);
  CHECK(sec.disagreements.empty());
}

TEST_CASE("theorem 4.1 census: n = 5 bucket matches the two families") {
  auto graphs = enumerate_connected(5);
  auto sec = verify_theorem41(graphs);
  CHECK(sec.checked == 21);
  CHECK(sec.disagreements.empty());
  // cross-count: exactly 4 graphs of order 5 sit in the n-2 bucket
  int bucket = 0;
  for (const auto& g : graphs)
    if (classify_eigencount(g) == EigenBucket::n_minus_2) ++bucket;
  CHECK(bucket == 4);
}

TEST_CASE("theorem 4.2 census: n = 5, 6 zero disagreements") {
  auto graphs = census_upto(6);
  auto sec = verify_theorem42(graphs);
  CHECK(sec.disagreements.empty());
  CHECK(sec.skipped_small == 6);  // the order-4 graphs
}

TEST_CASE("disconnected inputs are per-item errors, not fatal") {
  std::vector<Graph> graphs{complete(4), disjoint_union(complete(2), complete(2))};
  auto sec = verify_theorem31(graphs);
  CHECK(sec.checked == 1);
  CHECK(sec.errors == 1);
  CHECK(sec.disagreements.empty());
}

TEST_CASE("table 1: A1 passes, A48 has integer third eigenvalue") {
  auto rows = verify_table1();
  REQUIRE(rows.size() == 51);
  CHECK(rows[0].label == "A1");
  CHECK(rows[0].pass);
  CHECK(rows[47].label == "A48");
  CHECK(rows[47].pass);
  CHECK(rows[47].computed == doctest::Approx(0.0).epsilon(1e-6));
  // A12 passes via the either-label rule
  CHECK(rows[11].pass);
  CHECK(rows[11].note.find("matched=d5") != std::string::npos);
}

TEST_CASE("table 1: A16 documents the one inconsistent printed value") {
  auto rows = verify_table1();
  const auto& a16 = rows[15];
  REQUIRE(a16.label == "A16");
  // printed -2.1099 does not match the printed matrix, whose second least
  // eigenvalue is -2.0671 (A16 is exactly cospectral with A12); the exact
  // disqualifying inequality still holds
  CHECK(!a16.pass);
  CHECK(a16.computed == doctest::Approx(-2.0671).epsilon(1e-4));
  CHECK(a16.note.find("exact_violation=true") != std::string::npos);
  int fails = 0;
  for (const auto& r : rows) fails += !r.pass;
  CHECK(fails == 1);
}

TEST_CASE("table 2: all 16 rows pass") {
  auto rows = verify_table2();
  REQUIRE(rows.size() == 16);
  for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.label);
}

TEST_CASE("table 3: exact identity for small parameters") {
  auto rows = verify_table3(3, 2, 1);
  CHECK(!rows.empty());
  for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.label, " ", r.note);
}

TEST_CASE("fixture recovery is unique for all seven fixtures") {
  auto recs = recover_forbidden_fixtures();
  REQUIRE(recs.size() == 7);
  for (const auto& r : recs) {
    CHECK_MESSAGE(r.unique(), r.label);
  }
  // F1 is the 5-cycle
  Graph f1 = parse_graph6(recs[0].candidates.front());
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(is_isomorphic(f1, c5));
  // F6 is pinned to K_{2,2,1}
  Graph f6 = parse_graph6(recs[5].candidates.front());
  CHECK(is_isomorphic(f6, join(join(edgeless(2), edgeless(2)), complete(1))));
}

TEST_CASE("no recovered fixture embeds in a Theorem 3.1 member") {
  auto rows = verify_forbidden(3);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.label, " ", r.note);
}

TEST_CASE("cospectral search finds the order-14 pair") {
  auto members = enumerate_members(14, TheoremSet::thm31);
  auto pairs = cospectral_search(members, 1);
  bool found = false;
  for (const auto& p : pairs)
    found = found || (p.first == "J7[1,1,3,9]" && p.second == "J7[1,9,1,3]") ||
            (p.first == "J7[1,9,1,3]" && p.second == "J7[1,1,3,9]");
  CHECK(found);
  // a single descriptor yields nothing
  CHECK(cospectral_search({{FamilyId::I1, {5}}}, 1).empty());
}

TEST_CASE("serial and parallel census runs are identical") {
  auto graphs = census_upto(6);
  CHECK(section_json(verify_theorem31(graphs, 1)) == section_json(verify_theorem31(graphs, 4)));
  CHECK(section_json(verify_theorem42(graphs, 1)) == section_json(verify_theorem42(graphs, 4)));
  CHECK(table_json(verify_table3(3, 2, 1)) == table_json(verify_table3(3, 2, 4)));
}

TEST_CASE("n = 7 stream: all three theorems, zero disagreements") {
  std::ifstream in(std::string(DISTSPEC_TEST_DATA) + "/connected7.g6");
  REQUIRE(in.good());
  auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 853);
  auto s31 = verify_theorem31(graphs, 4);
  CHECK(s31.checked == 853);
  CHECK(s31.disagreements.empty());
  auto s41 = verify_theorem41(graphs, 4);
  CHECK(s41.disagreements.empty());
  auto s42 = verify_theorem42(graphs, 4);
  CHECK(s42.disagreements.empty());
}
