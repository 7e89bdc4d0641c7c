#ifndef DISTSPEC_INTMATRIX_HPP
#define DISTSPEC_INTMATRIX_HPP

#include <vector>

#include "distspec/intpoly.hpp"

namespace dspec {

// Square matrix over arbitrary-precision integers. Distance matrices and the
// fixture matrices are symmetric; distance divisor matrices are not, so
// symmetry is a queryable property rather than an invariant.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, BigInt(0)) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int order() const { return n_; }
  BigInt& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool is_symmetric() const;
  // max_i sum_j |a_ij|; every eigenvalue of a symmetric matrix lies in
  // [-bound, bound], and for any matrix every real root of the
  // characteristic polynomial does too (row-sum norm bound).
  BigInt row_sum_bound() const;

  bool operator==(const IntMatrix& o) const = default;

 private:
  int n_ = 0;
  std::vector<BigInt> e_;
};

// det(xI - M), exact, by the Faddeev-LeVerrier trace recurrence (every
// division is exact over the integers). Works for any square matrix.
IntPoly char_poly_exact(const IntMatrix& m);

}  // namespace dspec

#endif
