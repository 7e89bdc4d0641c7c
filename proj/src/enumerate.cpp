#include "distspec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace dspec {

namespace {

int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  // upper triangle, row-major over (u, v), u < v
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((mask >> pair_index(u, v, n)) & 1u) g.add_edge(u, v);
  return g;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("enumerate_connected supports 1 <= n <= 6; use a graph6 stream for larger orders");
  int m = n * (n - 1) / 2;
  // bit_map[perm][i] = image of edge-bit i under the relabeling
  std::vector<std::vector<int>> bit_map;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> bm(m);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        bm[pair_index(u, v, n)] = pair_index(perm[u], perm[v], n);
    bit_map.push_back(std::move(bm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph g = from_mask(n, mask);
    if (!is_connected(g)) continue;
    bool canonical = true;
    for (const auto& bm : bit_map) {
      std::uint64_t pm = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        pm |= std::uint64_t{1} << bm[std::countr_zero(rest)];
      if (pm < mask) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(g);
  }
  return out;
}

}  // namespace dspec
