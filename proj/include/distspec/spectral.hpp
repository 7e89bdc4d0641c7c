#ifndef DISTSPEC_SPECTRAL_HPP
#define DISTSPEC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/intmatrix.hpp"
#include "distspec/intpoly.hpp"
#include "distspec/sturm.hpp"

namespace dspec {

IntMatrix to_int_matrix(const DistMatrix& d);

// det(xI - D(G)); throws std::domain_error for disconnected g.
IntPoly distance_char_poly(const Graph& g);

struct SpectrumEntry {
  bool exact = false;
  Rational root;       // set when exact
  Rational lo, hi;     // isolating interval when not exact (width < 1e-9)
  double approx = 0;   // the root, or the interval midpoint
  int mult = 0;
};

struct Spectrum {
  int order = 0;
  std::vector<SpectrumEntry> entries;  // strictly descending roots
};

// Exact spectrum of D(G): integer roots deflated exactly, remaining real
// roots isolated by Sturm bisection into disjoint intervals of width < 1e-9.
Spectrum spectrum(const Graph& g);
// Same procedure for an arbitrary integer matrix with real spectrum
// (symmetric matrices and divisor matrices).
Spectrum spectrum_of_matrix(const IntMatrix& m);

int multiplicity_at(const Graph& g, const BigInt& r);

// Exact predicates of Theorem-level decisions: counts above/below the
// thresholds are computed with integer/rational arithmetic only.
bool third_largest_le_minus1(const Graph& g);  // needs n >= 3
bool second_least_ge_minus2(const Graph& g);   // needs n >= 2

// partial_2(G) < 1 - sqrt(3), decided exactly: multiples of x^2 - 2x - 2 are
// deflated, then the bracket around 1 - sqrt(3) is shrunk until no remaining
// root lies inside it.
bool second_largest_below_1_minus_sqrt3(const Graph& g);

bool are_cospectral(const Graph& g, const Graph& h);

// If p is distance equitable for g, the divisor matrix B (b_ij = distance sum
// from any vertex of block i to block j); nullopt otherwise.
std::optional<IntMatrix> check_equitable(const Graph& g, const Partition& p);

// Coarsest distance equitable refinement of the seed: blocks split by their
// vertices' distance-sum signatures until stable; deterministic block order.
Partition coarsest_equitable(const Graph& g, const Partition& seed);

// char(B_Pi) | char(D); the partition must be equitable (precondition error
// otherwise).
bool divisor_divides(const Graph& g, const Partition& p);

}  // namespace dspec

#endif
