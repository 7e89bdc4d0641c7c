#ifndef DISTSPEC_STURM_HPP
#define DISTSPEC_STURM_HPP

#include <vector>

#include "distspec/intmatrix.hpp"
#include "distspec/intpoly.hpp"

namespace dspec {

// Sturm chain of a square-free polynomial (integer polynomials; each element
// is a positive-rational multiple of the classical chain element, which
// preserves sign variations).
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

int sign_variations(const std::vector<IntPoly>& chain, const Rational& t);

// Number of distinct real roots of a square-free p in the open interval
// (a, b). Preconditions: a < b, p(a) != 0, p(b) != 0 (endpoint roots throw).
int sturm_count(const IntPoly& squarefree, const Rational& a, const Rational& b);
int sturm_count(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b);

// Cauchy root bound: 1 + max_i |c_i / c_deg|. Every real root r of p
// satisfies |r| < bound (strict).
Rational cauchy_root_bound(const IntPoly& p);

enum class Side { greater, less };

// Number of real roots of p strictly greater (resp. less) than t, counted
// with multiplicity; t must not be a root.
int count_roots_side(const IntPoly& p, Side side, const Rational& t);

// Number of eigenvalues of m strictly greater (resp. less) than t, counted
// with multiplicity, decided in exact arithmetic.
int count_eigen_with_multiplicity(const IntMatrix& m, Side side, const Rational& t);

// Multiplicity of the rational t as an eigenvalue of m (0 unless t is an
// integer: characteristic polynomials are monic).
int eigen_multiplicity(const IntMatrix& m, const Rational& t);

}  // namespace dspec

#endif
