#include <cmath>

#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectral.hpp"
#include "doctest.h"

using namespace dspec;

TEST_CASE("distance char polys of small fixtures") {
  // K5: (x-4)(x+1)^4
  CHECK(distance_char_poly(complete(5)) == IntPoly{-4, 1} * IntPoly{1, 1}.pow(4));
  // K2 v K1^c = K3: (x-2)(x+1)^2, equal to the I2 closed form at (2,1)
  Graph k3 = join(complete(2), edgeless(1));
  CHECK(distance_char_poly(k3) == IntPoly{-2, 1} * IntPoly{1, 1}.pow(2));
  // K_{2,2} = C4 with distance spectrum {4, 0, -2, -2}: (x+2)^2 (x^2-4x),
  // the closed form's quadratic at a = b = 2
  Graph k22 = join(edgeless(2), edgeless(2));
  CHECK(distance_char_poly(k22) == IntPoly{2, 1}.pow(2) * IntPoly{0, -4, 1});
  CHECK_THROWS_AS((void)distance_char_poly(disjoint_union(complete(2), complete(1))),
                  std::domain_error);
}

TEST_CASE("spectrum of K4") {
  Spectrum s = spectrum(complete(4));
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].exact);
  CHECK(s.entries[0].root == Rational(3));
  CHECK(s.entries[0].mult == 1);
  CHECK(s.entries[1].root == Rational(-1));
  CHECK(s.entries[1].mult == 3);
}

TEST_CASE("spectrum of K2^c v K2: two irrational roots, then -1, -2") {
  Graph g = join(edgeless(2), complete(2));
  Spectrum s = spectrum(g);
  REQUIRE(s.entries.size() == 4);
  // x^2 - 3x - 2 has roots (3 +- sqrt(17))/2
  double hi = (3 + std::sqrt(17.0)) / 2, lo = (3 - std::sqrt(17.0)) / 2;
  CHECK(!s.entries[0].exact);
  CHECK(std::fabs(s.entries[0].approx - hi) < 1e-8);
  CHECK(!s.entries[1].exact);
  CHECK(std::fabs(s.entries[1].approx - lo) < 1e-8);
  CHECK(s.entries[2].root == Rational(-1));
  CHECK(s.entries[3].root == Rational(-2));
  int total = 0;
  for (auto& e : s.entries) total += e.mult;
  CHECK(total == 4);
}

TEST_CASE("spectrum of P4: four simple roots, third near -1.1623") {
  Spectrum s = spectrum(path(4));
  REQUIRE(s.entries.size() == 4);
  for (auto& e : s.entries) CHECK(e.mult == 1);
  CHECK(std::fabs(s.entries[2].approx - (-1.1623)) < 1e-4);
  // entries strictly descending
  for (size_t i = 0; i + 1 < s.entries.size(); ++i)
    CHECK(s.entries[i].approx > s.entries[i + 1].approx);
}

TEST_CASE("multiplicity_at") {
  CHECK(multiplicity_at(join(edgeless(2), edgeless(3)), -1) == 0);
  CHECK(multiplicity_at(complete(6), -1) == 5);
  Graph i2_32 = join(complete(3), edgeless(2));
  CHECK(multiplicity_at(i2_32, -2) == 1);
}

TEST_CASE("threshold predicates") {
  CHECK(!third_largest_le_minus1(path(5)));  // d3(P5) = -0.7639
  Graph bad = glex_product(path(4), {edgeless(2), complete(1), edgeless(2), complete(1)});
  CHECK(!third_largest_le_minus1(bad));  // d3 = -0.8990
  CHECK(third_largest_le_minus1(path(4)));
  CHECK(second_least_ge_minus2(path(4)));
  CHECK_THROWS_AS((void)third_largest_le_minus1(complete(2)), std::invalid_argument);
  CHECK_THROWS_AS((void)second_least_ge_minus2(complete(1)), std::invalid_argument);
}

TEST_CASE("exact 1-sqrt(3) threshold recognizes exactly the complete graphs") {
  CHECK(second_largest_below_1_minus_sqrt3(complete(5)));
  CHECK(second_largest_below_1_minus_sqrt3(complete(2)));
  // K_{1,2} attains partial_2 = 1 - sqrt(3) exactly, so strict < fails
  CHECK(!second_largest_below_1_minus_sqrt3(join(complete(1), edgeless(2))));
  CHECK(!second_largest_below_1_minus_sqrt3(path(4)));
}

TEST_CASE("cospectrality") {
  Graph a = glex_product(path(4), {complete(1), complete(1), complete(3), complete(9)});
  Graph b = glex_product(path(4), {complete(1), complete(9), complete(1), complete(3)});
  CHECK(are_cospectral(a, b));
  CHECK(!is_isomorphic(a, b));
  CHECK(are_cospectral(complete(3), complete(3)));
  CHECK(!are_cospectral(complete(3), path(3)));
}
