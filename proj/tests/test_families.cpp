#include <set>

#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectral.hpp"
#include "doctest.h"

using namespace dspec;

namespace {

FamilyDescriptor fd(FamilyId id, std::vector<int> p) { return {id, std::move(p)}; }

}  // namespace

TEST_CASE("build examples") {
  CHECK(is_isomorphic(build(fd(FamilyId::I5, {2, 3})), join(edgeless(2), edgeless(3))));
  CHECK(build(fd(FamilyId::J7, {1, 1, 1, 1})) == path(4));
  Graph j1 = build(fd(FamilyId::J1, {1, 2, 1, 1}));
  CHECK(j1.order() == 5);
  CHECK(diameter(j1) == 3);
  CHECK_THROWS_AS((void)build(fd(FamilyId::I3, {1, 2, 2})), std::invalid_argument);
  CHECK_THROWS_AS((void)build(fd(FamilyId::J1, {1, 2})), std::invalid_argument);
}

TEST_CASE("descriptor strings round-trip") {
  for (const char* s : {"I3[2,3,4]", "J7[1,9,1,3]", "KST[2,5]", "I1[6]", "KJOIN[1,2,3]"}) {
    FamilyDescriptor d = parse_descriptor(s);
    CHECK(to_string(d) == s);
  }
  CHECK_THROWS_AS((void)parse_descriptor("I9[1]"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_descriptor("I3[2,3]"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_descriptor("I3[0,3,3]"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_descriptor("I3"), std::invalid_argument);
}

TEST_CASE("thm31 admissibility") {
  CHECK(thm31_admissible(fd(FamilyId::J7, {1, 1, 1, 1})));  // sigma = -12
  CHECK(j7_constraint({1, 1, 1, 1}) == -12);
  CHECK(thm31_admissible(fd(FamilyId::J1, {1, 3, 2, 2})));   // a=1, c=2, d<=2
  CHECK(!thm31_admissible(fd(FamilyId::J1, {2, 1, 2, 1})));  // a,c >= 2
  CHECK(thm31_admissible(fd(FamilyId::I5, {1, 1})));
  CHECK(!thm31_admissible(fd(FamilyId::KST, {2, 2})));  // not a Theorem 3.1 id
  CHECK(thm31_admissible(fd(FamilyId::J3, {1, 2, 4, 1})));
  CHECK(!thm31_admissible(fd(FamilyId::J3, {2, 2, 3, 1})));
  CHECK(thm31_admissible(fd(FamilyId::J2, {2, 1, 1, 2})));
  CHECK(!thm31_admissible(fd(FamilyId::J2, {2, 1, 1, 3})));
  CHECK(thm31_admissible(fd(FamilyId::J4, {3, 1, 2, 2})));
  CHECK(!thm31_admissible(fd(FamilyId::J4, {3, 2, 2, 2})));
}

TEST_CASE("recognize examples") {
  auto c4 = recognize(join(edgeless(2), edgeless(2)));
  REQUIRE(c4.has_value());
  CHECK(*c4 == fd(FamilyId::I5, {2, 2}));

  CHECK(!recognize(path(5)).has_value());

  // P4 matches J1 first under the documented id priority
  auto p4 = recognize(path(4));
  REQUIRE(p4.has_value());
  CHECK(*p4 == fd(FamilyId::J1, {1, 1, 1, 1}));

  // the generalized-product example graph is outside every defining
  // expression (both middle parts independent of size 2)
  Graph fig1 = glex_product(path(4), {complete(2), edgeless(2), edgeless(2), complete(2)});
  CHECK(!recognize(fig1).has_value());

  // complete graphs fold into I1
  auto k6 = recognize(complete(6));
  REQUIRE(k6.has_value());
  CHECK(*k6 == fd(FamilyId::I1, {6}));
  CHECK(!recognize(complete(3)).has_value());  // below the I1 minimum
}

TEST_CASE("recognize_all lists every matching family") {
  Graph k23 = join(edgeless(2), edgeless(3));
  auto all = recognize_all(k23);
  std::set<std::string> names;
  for (auto& d : all) names.insert(to_string(d));
  CHECK(names.count("I5[2,3]"));
  CHECK(names.count("KST[2,3]"));

  Graph kjoin = join(complete(2), disjoint_union(complete(2), complete(2)));
  auto all2 = recognize_all(kjoin);
  std::set<std::string> names2;
  for (auto& d : all2) names2.insert(to_string(d));
  CHECK(names2.count("I3[2,2,2]"));
  CHECK(names2.count("KJOIN[2,2,2]"));
}

TEST_CASE("build then recognize returns an isomorphic member (params <= 4)") {
  std::vector<FamilyId> ids{FamilyId::I1, FamilyId::I2, FamilyId::I3, FamilyId::I4, FamilyId::I5,
                            FamilyId::I6, FamilyId::I7, FamilyId::J1, FamilyId::J2, FamilyId::J3,
                            FamilyId::J4, FamilyId::J5, FamilyId::J6, FamilyId::J7};
  for (FamilyId id : ids) {
    int arity = family_arity(id);
    std::vector<int> p(arity, 1);
    for (;;) {
      FamilyDescriptor d{id, p};
      if (structurally_valid(d)) {
        Graph g = build(d);
        auto rec = recognize(g);
        REQUIRE_MESSAGE(rec.has_value(), to_string(d));
        CHECK_MESSAGE(is_isomorphic(build(*rec), g), to_string(d), " -> ", to_string(*rec));
      }
      int i = arity - 1;
      while (i >= 0 && p[i] == 4) p[i--] = 1;
      if (i < 0) break;
      ++p[i];
    }
  }
}

TEST_CASE("enumerate thm41 members at order 4") {
  auto members = enumerate_members(4, TheoremSet::thm41);
  std::set<std::string> names;
  for (auto& d : members) names.insert(to_string(d));
  CHECK(names == std::set<std::string>{"KST[1,3]", "KST[2,2]", "KCK[2,2]"});
}

TEST_CASE("enumerate thm42 members at order 5 include the KJOIN forms") {
  auto members = enumerate_members(5, TheoremSet::thm42);
  std::set<std::string> names;
  for (auto& d : members) names.insert(to_string(d));
  CHECK(names.count("KJOIN[1,1,3]"));
  CHECK(names.count("KJOIN[1,2,2]"));
  CHECK(names.count("KJOIN[2,1,2]"));
  CHECK(names.count("KABC[1,2,2]"));
  for (auto& d : members)
    if (d.id == FamilyId::KJOIN) CHECK(d.params[1] + d.params[2] >= 3);
}

TEST_CASE("enumerate thm31 members at order 14 include the cospectral pair") {
  auto members = enumerate_members(14, TheoremSet::thm31);
  std::set<std::string> names;
  for (auto& d : members) names.insert(to_string(d));
  CHECK(names.count("J7[1,1,3,9]"));
  CHECK(names.count("J7[1,9,1,3]"));
  for (auto& d : members) CHECK(thm31_admissible(d));
}

TEST_CASE("classify_eigencount buckets") {
  CHECK(classify_eigencount(complete(7)) == EigenBucket::n_minus_1);
  CHECK(classify_eigencount(join(edgeless(2), edgeless(3))) == EigenBucket::n_minus_2);
  Graph k222 = join(edgeless(2), join(edgeless(2), edgeless(2)));
  CHECK(classify_eigencount(k222) == EigenBucket::n_minus_3);
  CHECK(classify_eigencount(path(5)) == EigenBucket::other);
}

TEST_CASE("admissible members pass the exact predicates; inadmissible J forms fail") {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& d : enumerate_members(n, TheoremSet::thm31)) {
      Graph g = build(d);
      bool both = third_largest_le_minus1(g) && second_least_ge_minus2(g);
      CHECK_MESSAGE(both, to_string(d));
    }
  }
  // structurally valid but inadmissible J descriptors fail at least one predicate
  std::vector<FamilyId> jids{FamilyId::J1, FamilyId::J2, FamilyId::J3, FamilyId::J4, FamilyId::J7};
  int checked = 0;
  for (FamilyId id : jids) {
    std::vector<int> p(4, 1);
    for (;;) {
      FamilyDescriptor d{id, p};
      if (!thm31_admissible(d)) {
        Graph g = build(d);
        bool pass = third_largest_le_minus1(g) && second_least_ge_minus2(g);
        CHECK_MESSAGE(!pass, to_string(d));
        ++checked;
      }
      int i = 3;
      while (i >= 0 && p[i] == 4) p[i--] = 1;
      if (i < 0) break;
      ++p[i];
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("diameter of built members: I families <= 2, J families exactly 3") {
  for (int n = 4; n <= 7; ++n)
    for (const auto& d : enumerate_members(n, TheoremSet::thm31)) {
      Graph g = build(d);
      bool is_j = d.id >= FamilyId::J1 && d.id <= FamilyId::J7;
      if (is_j)
        CHECK(diameter(g) == 3);
      else
        CHECK(diameter(g) <= 2);
    }
}
