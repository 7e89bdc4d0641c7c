#include "distspec/intmatrix.hpp"

#include <stdexcept>

namespace dspec {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

BigInt IntMatrix::row_sum_bound() const {
  BigInt best = 0;
  for (int i = 0; i < n_; ++i) {
    BigInt s = 0;
    for (int j = 0; j < n_; ++j) s += abs(at(i, j));
    if (s > best) best = s;
  }
  return best;
}

IntPoly char_poly_exact(const IntMatrix& m) {
  int n = m.order();
  if (n == 0) return IntPoly::constant(1);
  // M_1 = A, c_1 = -tr(M_1); M_k = A(M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  coeffs[n] = 1;
  IntMatrix mk = m;
  BigInt ck;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = A*M_{k-1} + c_{k-1}*A
      IntMatrix next(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          BigInt s = m.at(i, j) * ck;
          for (int l = 0; l < n; ++l) s += m.at(i, l) * mk.at(l, j);
          next.at(i, j) = s;
        }
      mk = std::move(next);
    }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    BigInt c = -tr;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
    ck = c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace dspec
