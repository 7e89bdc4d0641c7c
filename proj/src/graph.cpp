#include "distspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace dspec {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be positive");
  if (n > kMaxOrder) throw std::invalid_argument("graph order exceeds 62");
  adj_.assign(n, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) e.emplace_back(u, v);
  return e;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

Graph atom(AtomKind kind, int n) {
  Graph g(n);
  switch (kind) {
    case AtomKind::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    case AtomKind::edgeless:
      break;
    case AtomKind::path:
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      break;
  }
  return g;
}

Graph complete(int n) { return atom(AtomKind::complete, n); }
Graph edgeless(int n) { return atom(AtomKind::edgeless, n); }
Graph path(int n) { return atom(AtomKind::path, n); }

Graph complement(const Graph& g) {
  int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  Graph r(ng + nh);
  for (auto [u, v] : g.edges()) r.add_edge(u, v);
  for (auto [u, v] : h.edges()) r.add_edge(ng + u, ng + v);
  return r;
}

Graph join(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  Graph r = disjoint_union(g, h);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) r.add_edge(u, ng + v);
  return r;
}

Graph glex_product(const Graph& base, const std::vector<Graph>& parts) {
  if (static_cast<int>(parts.size()) != base.order())
    throw std::invalid_argument("glex_product: parts list must match base order");
  if (!is_connected(base)) throw std::invalid_argument("glex_product: base must be connected");
  std::vector<int> offset(parts.size());
  int total = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    offset[i] = total;
    total += parts[i].order();
  }
  Graph r(total);
  for (size_t i = 0; i < parts.size(); ++i)
    for (auto [u, v] : parts[i].edges()) r.add_edge(offset[i] + u, offset[i] + v);
  for (auto [i, j] : base.edges())
    for (int u = 0; u < parts[i].order(); ++u)
      for (int v = 0; v < parts[j].order(); ++v) r.add_edge(offset[i] + u, offset[j] + v);
  return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& X) {
  if (X.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::uint64_t seen = 0;
  for (int v : X) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if ((seen >> v) & 1u) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    seen |= std::uint64_t{1} << v;
  }
  Graph r(static_cast<int>(X.size()));
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      if (g.adjacent(X[i], X[j])) r.add_edge(static_cast<int>(i), static_cast<int>(j));
  return r;
}

namespace {

// Mask of vertices reachable from `start` within `allowed`.
std::uint64_t reach(const Graph& g, int start, std::uint64_t allowed) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v);
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

bool is_connected(const Graph& g) {
  return reach(g, 0, full_mask(g.order())) == full_mask(g.order());
}

DistMatrix all_pairs_distances(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("distance matrix requires a connected graph");
  int n = g.order();
  DistMatrix d;
  d.n = n;
  d.d.assign(static_cast<size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int dist = 0;
    while (frontier) {
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        d.d[static_cast<size_t>(s) * n + v] = dist;
      }
      std::uint64_t next = 0;
      f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(v);
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++dist;
    }
  }
  return d;
}

int diameter(const Graph& g) {
  DistMatrix d = all_pairs_distances(g);
  return *std::max_element(d.d.begin(), d.d.end());
}

namespace {

// Backtracking search for an injective map h-vertices -> g-vertices (within
// `allowed`) preserving adjacency and non-adjacency.
bool extend_embedding(const Graph& g, const Graph& h, std::vector<int>& map, int next,
                      std::uint64_t used, std::uint64_t allowed) {
  if (next == h.order()) return true;
  std::uint64_t candidates = allowed & ~used;
  while (candidates) {
    int gv = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (g.degree(gv) < h.degree(next)) continue;
    bool ok = true;
    for (int prev = 0; prev < next; ++prev) {
      if (h.adjacent(prev, next) != g.adjacent(map[prev], gv)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[next] = gv;
    if (extend_embedding(g, h, map, next + 1, used | (std::uint64_t{1} << gv), allowed)) return true;
  }
  return false;
}

}  // namespace

bool contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  std::vector<int> map(h.order(), -1);
  return extend_embedding(g, h, map, 0, 0, full_mask(g.order()));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  std::vector<int> map(h.order(), -1);
  // same order + degree pruning + induced embedding == isomorphism
  return extend_embedding(g, h, map, 0, 0, full_mask(g.order()));
}

std::optional<std::pair<Graph, Graph>> join_decompose(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("join_decompose: order must be >= 2");
  Graph c = complement(g);
  std::uint64_t comp0 = reach(c, 0, full_mask(c.order()));
  if (comp0 == full_mask(c.order())) return std::nullopt;
  std::vector<int> left, right;
  for (int v = 0; v < g.order(); ++v)
    ((comp0 >> v) & 1u ? left : right).push_back(v);
  return std::make_pair(induced_subgraph(g, left), induced_subgraph(g, right));
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("partition: ground set must be nonempty");
  block_of_.assign(n, -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
      if (block_of_[v] != -1) throw std::invalid_argument("partition: blocks not disjoint");
      block_of_[v] = 0;  // provisional; reassigned after ordering
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of_[v] == -1) throw std::invalid_argument("partition: blocks do not cover ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int v : blocks_[i]) block_of_[v] = static_cast<int>(i);
}

Partition Partition::single_block(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {all});
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back({v});
  return Partition(n, std::move(blocks));
}

TwinPartition twin_partition(const Graph& g) {
  int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t nu = g.neighbors(u) & ~(std::uint64_t{1} << v);
      std::uint64_t nv = g.neighbors(v) & ~(std::uint64_t{1} << u);
      if (nu == nv) parent[find(u)] = find(v);
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& grp : groups)
    if (!grp.empty()) blocks.push_back(std::move(grp));
  TwinPartition tp{Partition(n, std::move(blocks)), {}};
  for (const auto& b : tp.partition.blocks()) {
    if (b.size() == 1) {
      tp.tags.push_back(TwinTag::singleton);
      continue;
    }
    bool clique = g.adjacent(b[0], b[1]);
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j)
        if (g.adjacent(b[i], b[j]) != clique)
          throw std::logic_error("twin_partition: mixed block");  // cannot happen
    tp.tags.push_back(clique ? TwinTag::clique_twin : TwinTag::independent_twin);
  }
  return tp;
}

}  // namespace dspec
