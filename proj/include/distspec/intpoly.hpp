#ifndef DISTSPEC_INTPOLY_HPP
#define DISTSPEC_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dspec {

using BigInt = mpz_class;
using Rational = mpq_class;

// Univariate polynomial over arbitrary-precision integers, coefficients
// ascending by degree. Canonical form: no stored leading zeros; the zero
// polynomial is the empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt c);
  // x - r
  static IntPoly x_minus(const BigInt& r);
  // x^k
  static IntPoly monomial(int k, BigInt coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  const BigInt& leading() const;
  // Coefficient of x^i (0 beyond the degree).
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& t) const;
  Rational eval(const Rational& t) const;

  IntPoly derivative() const;
  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly pow(int e) const;

  // gcd of all coefficients (0 for the zero polynomial)
  BigInt content() const;
  // p / content(p), scaled so the leading coefficient is positive
  IntPoly primitive_part() const;

  std::string to_string() const;  // human-readable, descending powers

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact quotient p/q when q | p over the rationals and the quotient has
// integer coefficients; nullopt otherwise. Throws std::invalid_argument
// for q = 0.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);

struct Deflation {
  IntPoly cofactor;
  int multiplicity = 0;
};

// Maximal k with (x-r)^k | p, plus the exact cofactor (repeated synthetic
// division). Throws std::invalid_argument for p = 0.
Deflation deflate_at(const IntPoly& p, const BigInt& r);

// Primitive polynomial gcd over Z[x] (Euclidean remainders with content
// removal; fine at the degrees this project sees).
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Yun square-free decomposition: p = c * prod f_i^{m_i} with the f_i
// pairwise coprime, square-free and primitive with positive leading
// coefficient. Returned in increasing multiplicity order.
std::vector<std::pair<IntPoly, int>> squarefree_decompose(const IntPoly& p);

}  // namespace dspec

#endif
