#include "distspec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dspec {

namespace {

double off_diag_mass(const std::vector<std::vector<double>>& a) {
  double s = 0;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

double frobenius(const std::vector<std::vector<double>>& a) {
  double s = 0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

}  // namespace

std::vector<double> approx_eigenvalues(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("jacobi: not square");
    for (int j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("jacobi: matrix not symmetric");
  }
  if (n == 0) return {};
  const double norm = frobenius(a);
  const double tol = 1e-12 * (norm > 0 ? norm : 1.0);
  for (int sweep = 0; sweep < 100 && off_diag_mass(a) >= tol; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (apq == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = a[r][p], arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

std::vector<double> approx_eigenvalues(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("jacobi: matrix not symmetric");
  int n = m.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).get_d();
  return approx_eigenvalues(std::move(a));
}

}  // namespace dspec
