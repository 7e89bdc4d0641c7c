#include "distspec/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dspec {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  p.c_.push_back(std::move(c));
  p.trim();
  return p;
}

IntPoly IntPoly::x_minus(const BigInt& r) {
  IntPoly p;
  p.c_ = {-r, BigInt(1)};
  return p;
}

IntPoly IntPoly::monomial(int k, BigInt coeff) {
  IntPoly p;
  if (coeff == 0) return p;
  p.c_.assign(k + 1, BigInt(0));
  p.c_[k] = std::move(coeff);
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading(): zero polynomial");
  return c_.back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * t + Rational(*it);
    acc.canonicalize();
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (int i = 1; i <= degree(); ++i) d.c_.push_back(c_[i] * i);
  d.trim();
  return d;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const BigInt& s) const {
  IntPoly r = *this;
  for (auto& v : r.c_) v *= s;
  r.trim();
  return r;
}

IntPoly IntPoly::pow(int e) const {
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPoly r;
  r.c_.reserve(c_.size());
  for (const auto& v : c_) r.c_.push_back(v / g);
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    BigInt mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Long division over Q: returns (quotient, remainder) with rational coeffs.
std::pair<std::vector<Rational>, std::vector<Rational>> rational_divmod(
    const IntPoly& p, const IntPoly& q) {
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  int dq = q.degree();
  std::vector<Rational> quot(std::max<int>(0, p.degree() - dq + 1), Rational(0));
  Rational lc(q.leading());
  for (int i = p.degree(); i >= dq; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lc;
    f.canonicalize();
    quot[i - dq] = f;
    for (int j = 0; j <= dq; ++j) {
      rem[i - dq + j] -= f * Rational(q.coeff(j));
      rem[i - dq + j].canonicalize();
    }
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  return {std::move(quot), std::move(rem)};
}

}  // namespace

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < q.degree()) return std::nullopt;
  auto [quot, rem] = rational_divmod(p, q);
  if (!rem.empty()) return std::nullopt;
  std::vector<BigInt> out;
  out.reserve(quot.size());
  for (auto& v : quot) {
    if (v.get_den() != 1) return std::nullopt;
    out.push_back(v.get_num());
  }
  return IntPoly(std::move(out));
}

Deflation deflate_at(const IntPoly& p, const BigInt& r) {
  if (p.is_zero()) throw std::invalid_argument("deflate_at: zero polynomial");
  Deflation d{p, 0};
  for (;;) {
    // synthetic division by (x - r)
    const auto& c = d.cofactor.coeffs();
    int deg = d.cofactor.degree();
    if (deg < 1) break;
    std::vector<BigInt> q(deg);
    BigInt carry = 0;
    for (int i = deg; i >= 1; --i) {
      carry = c[i] + carry * r;
      q[i - 1] = carry;
    }
    BigInt remainder = c[0] + carry * r;
    if (remainder != 0) break;
    d.cofactor = IntPoly(std::move(q));
    ++d.multiplicity;
  }
  return d;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.is_zero() ? a : a.primitive_part();
  b = b.is_zero() ? b : b.primitive_part();
  while (!b.is_zero()) {
    auto [quot, rem] = rational_divmod(a, b);
    (void)quot;
    // clear denominators; only the gcd chain matters, not scale
    std::vector<BigInt> r;
    if (!rem.empty()) {
      BigInt den = 1;
      for (auto& v : rem) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
      r.reserve(rem.size());
      for (auto& v : rem) {
        Rational scaled = v * Rational(den);
        scaled.canonicalize();
        r.push_back(scaled.get_num());
      }
    }
    a = std::move(b);
    b = IntPoly(std::move(r));
    if (!b.is_zero()) b = b.primitive_part();
  }
  if (a.is_zero()) return a;
  return a.primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decompose(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm on the primitive part.
  IntPoly a = p.primitive_part();
  IntPoly d = a.derivative();
  IntPoly g = poly_gcd(a, d);
  IntPoly w = *divide_exact(a, g);
  IntPoly y = *divide_exact(d, g);
  int i = 1;
  for (;;) {
    IntPoly z = y - w.derivative();
    if (z.is_zero()) {
      if (w.degree() > 0) out.emplace_back(w.primitive_part(), i);
      break;
    }
    IntPoly gi = poly_gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi.primitive_part(), i);
    w = *divide_exact(w, gi);
    y = *divide_exact(z, gi);
    ++i;
  }
  return out;
}

}  // namespace dspec
