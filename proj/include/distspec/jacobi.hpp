#ifndef DISTSPEC_JACOBI_HPP
#define DISTSPEC_JACOBI_HPP

#include <vector>

#include "distspec/intmatrix.hpp"

namespace dspec {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// descending. Sweeps run until the off-diagonal Frobenius mass drops below
// 1e-12 of the matrix Frobenius norm. Non-symmetric input throws.
std::vector<double> approx_eigenvalues(std::vector<std::vector<double>> a);
std::vector<double> approx_eigenvalues(const IntMatrix& m);

}  // namespace dspec

#endif
