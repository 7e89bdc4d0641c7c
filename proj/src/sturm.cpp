#include "distspec/sturm.hpp"

#include <stdexcept>

namespace dspec {

namespace {

// Remainder of a by b over Q, scaled by a positive rational into a primitive
// integer polynomial (sign preserved).
IntPoly scaled_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  Rational lc{b.leading()};
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lc;
    f.canonicalize();
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] -= f * Rational(b.coeff(j));
      rem[i - db + j].canonicalize();
    }
    rem[i] = 0;
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  if (rem.empty()) return IntPoly();
  BigInt den = 1;
  for (auto& v : rem) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(rem.size());
  for (auto& v : rem) {
    Rational s = v * Rational(den);
    s.canonicalize();
    out.push_back(s.get_num());
  }
  IntPoly r{std::move(out)};
  BigInt g = r.content();
  std::vector<BigInt> scaled;
  scaled.reserve(r.coeffs().size());
  for (const auto& v : r.coeffs()) scaled.push_back(v / g);
  return IntPoly(std::move(scaled));
}

int sgn(const Rational& q) { return sgn(q.get_num()); }

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = scaled_remainder(a, b);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& t) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(t));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sturm_count(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("sturm_count: need a < b");
  if (chain.front().eval(a) == 0 || chain.front().eval(b) == 0)
    throw std::invalid_argument("sturm_count: endpoint is a root (deflate first)");
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  return sturm_count(sturm_chain(p), a, b);
}

Rational cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  Rational best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q(abs(p.coeff(i)), abs(p.leading()));
    q.canonicalize();
    if (q > best) best = q;
  }
  return best + 1;
}

int count_roots_side(const IntPoly& p, Side side, const Rational& t) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_side: zero polynomial");
  if (p.eval(t) == 0) throw std::invalid_argument("count_roots_side: t is a root");
  if (p.degree() == 0) return 0;
  // p(t) != 0, so no square-free factor vanishes at t; the Cauchy bound of p
  // is strict and covers every factor's roots.
  Rational bound = cauchy_root_bound(p);
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decompose(p)) {
    if (factor.degree() == 0) continue;
    if (side == Side::greater) {
      if (t >= bound) continue;
      total += mult * sturm_count(factor, t, bound);
    } else {
      if (t <= -bound) continue;
      total += mult * sturm_count(factor, Rational(-bound), t);
    }
  }
  return total;
}

int eigen_multiplicity(const IntMatrix& m, const Rational& t) {
  if (t.get_den() != 1) return 0;  // monic char poly: rational roots are integers
  IntPoly p = char_poly_exact(m);
  return deflate_at(p, t.get_num()).multiplicity;
}

int count_eigen_with_multiplicity(const IntMatrix& m, Side side, const Rational& t) {
  IntPoly p = char_poly_exact(m);
  if (t.get_den() == 1) {
    auto d = deflate_at(p, t.get_num());
    p = d.cofactor;
  }
  if (p.degree() <= 0) return 0;
  return count_roots_side(p, side, t);
}

}  // namespace dspec
