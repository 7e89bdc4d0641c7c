#include "distspec/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dspec {

IntMatrix to_int_matrix(const DistMatrix& d) {
  IntMatrix m(d.n);
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) m.at(i, j) = d.at(i, j);
  return m;
}

IntPoly distance_char_poly(const Graph& g) {
  return char_poly_exact(to_int_matrix(all_pairs_distances(g)));
}

namespace {

double to_double(const Rational& q) { return q.get_d(); }

// Isolating intervals for the real roots of a square-free factor, each
// refined below `width`. The factor must have no rational roots (integer
// roots are deflated before calling), so rational bisection points are never
// roots and every isolated root is simple (sign change refinement applies).
std::vector<std::pair<Rational, Rational>> isolate_roots(const IntPoly& f, const Rational& width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (f.degree() <= 0) return out;
  auto chain = sturm_chain(f);
  Rational bound = cauchy_root_bound(f);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int count = sturm_count(chain, lo, hi);
    if (count == 0) continue;
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    if (count == 1) {
      // refine by sign bisection (simple root of a square-free factor)
      int slo = sgn(f.eval(lo));
      while (hi - lo >= width) {
        Rational m = (lo + hi) / 2;
        m.canonicalize();
        int sm = sgn(f.eval(m));
        if (sm == 0) throw std::logic_error("isolate_roots: rational root not deflated");
        if (sm == slo)
          lo = m;
        else
          hi = m;
      }
      out.emplace_back(lo, hi);
      continue;
    }
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum spectrum_impl(const IntMatrix& m) {
  IntPoly p = char_poly_exact(m);
  Spectrum s;
  s.order = m.order();

  // Integer roots: scan the row-sum bound (covers all real eigenvalues of a
  // symmetric matrix; for divisor matrices the real roots obey the same
  // norm bound).
  std::map<BigInt, int> int_roots;
  BigInt bound = m.row_sum_bound();
  IntPoly rest = p;
  for (BigInt r = -bound; r <= bound; ++r) {
    if (rest.degree() == 0) break;
    auto d = deflate_at(rest, r);
    if (d.multiplicity > 0) {
      int_roots[r] = d.multiplicity;
      rest = d.cofactor;
    }
  }

  const Rational width(1, 1000000000);
  struct Iso {
    IntPoly f;
    Rational lo, hi;
    int mult;
  };
  std::vector<Iso> irr;
  auto factors = rest.degree() > 0 ? squarefree_decompose(rest)
                                   : std::vector<std::pair<IntPoly, int>>{};
  for (const auto& [f, mult] : factors) {
    for (auto& [lo, hi] : isolate_roots(f, width))
      irr.push_back({f, lo, hi, mult});
  }
  // Roots are pairwise distinct (coprime factors, integer roots removed), so
  // overlapping intervals can always be separated by further sign bisection.
  auto bisect_once = [](Iso& it) {
    Rational mid = (it.lo + it.hi) / 2;
    mid.canonicalize();
    if (sgn(it.f.eval(mid)) == sgn(it.f.eval(it.lo)))
      it.lo = mid;
    else
      it.hi = mid;
  };
  std::sort(irr.begin(), irr.end(), [](const Iso& a, const Iso& b) { return a.lo < b.lo; });
  for (size_t i = 0; i + 1 < irr.size();) {
    if (irr[i].hi > irr[i + 1].lo) {
      bisect_once(irr[i]);
      bisect_once(irr[i + 1]);
      if (irr[i].lo > irr[i + 1].lo) std::swap(irr[i], irr[i + 1]);
    } else {
      ++i;
    }
  }
  // keep the deflated integer roots outside every interval so ordering
  // against exact entries is unambiguous
  for (auto& it : irr)
    for (const auto& [r, mult] : int_roots) {
      (void)mult;
      Rational rq(r);
      while (it.lo < rq && rq < it.hi) bisect_once(it);
    }

  for (const auto& [r, mult] : int_roots) {
    SpectrumEntry e;
    e.exact = true;
    e.root = Rational(r);
    e.approx = e.root.get_d();
    e.mult = mult;
    s.entries.push_back(e);
  }
  for (const auto& it : irr) {
    SpectrumEntry e;
    e.exact = false;
    e.lo = it.lo;
    e.hi = it.hi;
    e.approx = (to_double(it.lo) + to_double(it.hi)) / 2;
    e.mult = it.mult;
    s.entries.push_back(e);
  }
  std::sort(s.entries.begin(), s.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    Rational ka = a.exact ? a.root : a.lo;
    Rational kb = b.exact ? b.root : b.lo;
    return ka > kb;
  });
  int total = 0;
  for (const auto& e : s.entries) total += e.mult;
  if (total != s.order) throw std::logic_error("spectrum: multiplicities do not sum to order");
  return s;
}

}  // namespace

Spectrum spectrum_of_matrix(const IntMatrix& m) { return spectrum_impl(m); }

Spectrum spectrum(const Graph& g) {
  return spectrum_impl(to_int_matrix(all_pairs_distances(g)));
}

int multiplicity_at(const Graph& g, const BigInt& r) {
  return deflate_at(distance_char_poly(g), r).multiplicity;
}

bool third_largest_le_minus1(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("third_largest_le_minus1: order must be >= 3");
  IntMatrix d = to_int_matrix(all_pairs_distances(g));
  return count_eigen_with_multiplicity(d, Side::greater, Rational(-1)) <= 2;
}

bool second_least_ge_minus2(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("second_least_ge_minus2: order must be >= 2");
  IntMatrix d = to_int_matrix(all_pairs_distances(g));
  return count_eigen_with_multiplicity(d, Side::less, Rational(-2)) <= 1;
}

bool second_largest_below_1_minus_sqrt3(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("second_largest_below_1_minus_sqrt3: order must be >= 2");
  IntPoly p = distance_char_poly(g);
  // minimal polynomial of 1 - sqrt(3); its other root 1 + sqrt(3) is larger
  const IntPoly minpoly{-2, -2, 1};
  int quad_mult = 0;
  for (;;) {
    auto q = divide_exact(p, minpoly);
    if (!q) break;
    p = *q;
    ++quad_mult;
  }
  // count eigenvalues > 1 - sqrt(3): the 1 + sqrt(3) copies, plus roots of
  // the quadratic-free part beyond a bracket shrunk until it is root-free
  Rational lo(-74, 100), hi(-73, 100);
  auto factors = p.degree() > 0 ? squarefree_decompose(p)
                                : std::vector<std::pair<IntPoly, int>>{};
  auto roots_inside = [&]() {
    int c = 0;
    for (const auto& [f, mult] : factors) {
      (void)mult;
      if (f.degree() > 0) c += sturm_count(f, lo, hi);
    }
    return c;
  };
  while (roots_inside() > 0) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    // x^2 - 2x - 2 is positive left of 1 - sqrt(3), negative between the roots
    if (sgn(minpoly.eval(mid)) > 0)
      lo = mid;
    else
      hi = mid;
  }
  // eigenvalues >= 1 - sqrt(3): quad_mult copies each of 1 - sqrt(3) and
  // 1 + sqrt(3), plus the roots of the quadratic-free part above the bracket
  int at_least = 2 * quad_mult;
  if (p.degree() > 0) at_least += count_roots_side(p, Side::greater, hi);
  return at_least <= 1;
}

bool are_cospectral(const Graph& g, const Graph& h) {
  return distance_char_poly(g) == distance_char_poly(h);
}

std::optional<IntMatrix> check_equitable(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.order()) throw std::invalid_argument("check_equitable: partition/graph size mismatch");
  DistMatrix d = all_pairs_distances(g);
  int k = static_cast<int>(p.size());
  IntMatrix b(k);
  for (int i = 0; i < k; ++i) {
    const auto& bi = p.blocks()[i];
    for (int j = 0; j < k; ++j) {
      const auto& bj = p.blocks()[j];
      long first = -1;
      for (int v : bi) {
        long s = 0;
        for (int u : bj) s += d.at(v, u);
        if (first < 0)
          first = s;
        else if (s != first)
          return std::nullopt;
      }
      b.at(i, j) = first;
    }
  }
  return b;
}

Partition coarsest_equitable(const Graph& g, const Partition& seed) {
  if (seed.ground_size() != g.order()) throw std::invalid_argument("coarsest_equitable: partition/graph size mismatch");
  DistMatrix d = all_pairs_distances(g);
  Partition cur = seed;
  for (;;) {
    int k = static_cast<int>(cur.size());
    // signature of v: distance sums to each current block
    std::vector<std::vector<long>> sig(g.order(), std::vector<long>(k, 0));
    for (int v = 0; v < g.order(); ++v)
      for (int j = 0; j < k; ++j)
        for (int u : cur.blocks()[j]) sig[v][j] += d.at(v, u);
    std::vector<std::vector<int>> next;
    for (const auto& block : cur.blocks()) {
      std::map<std::vector<long>, std::vector<int>> split;
      for (int v : block) split[sig[v]].push_back(v);
      for (auto& [key, verts] : split) next.push_back(verts);
    }
    Partition refined(g.order(), std::move(next));
    if (refined == cur) return cur;
    cur = std::move(refined);
  }
}

bool divisor_divides(const Graph& g, const Partition& p) {
  auto b = check_equitable(g, p);
  if (!b) throw std::invalid_argument("divisor_divides: partition is not distance equitable");
  IntPoly phi = distance_char_poly(g);
  IntPoly psi = char_poly_exact(*b);
  return divide_exact(phi, psi).has_value();
}

}  // namespace dspec
