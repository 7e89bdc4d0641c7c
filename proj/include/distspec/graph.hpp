#ifndef DISTSPEC_GRAPH_HPP
#define DISTSPEC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dspec {

// graph6 short form tops out at 62 vertices, which bounds every graph this
// project touches; one adjacency bitmask word per vertex.
inline constexpr int kMaxOrder = 62;

// Undirected simple labeled graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

enum class AtomKind { complete, edgeless, path };

Graph atom(AtomKind kind, int n);
Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
// Replace vertex i of base by parts[i], joining parts across base edges.
Graph glex_product(const Graph& base, const std::vector<Graph>& parts);
// Vertices relabeled 0..|X|-1 in the order given; X must be nonempty,
// in range and duplicate-free.
Graph induced_subgraph(const Graph& g, const std::vector<int>& X);

bool is_connected(const Graph& g);

// Matrix of pairwise shortest-path lengths (small nonnegative integers).
struct DistMatrix {
  int n = 0;
  std::vector<int> d;  // row-major
  int at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
};

// Throws std::domain_error on disconnected input.
DistMatrix all_pairs_distances(const Graph& g);
int diameter(const Graph& g);

// True iff some vertex subset of g induces a subgraph isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

// If the complement of g is disconnected, the split g = G1 v G2 with G1
// induced on the complement component of vertex 0; nullopt otherwise.
std::optional<std::pair<Graph, Graph>> join_decompose(const Graph& g);

// Ordered list of disjoint nonempty vertex sets covering 0..n-1; blocks are
// sorted internally and ordered by smallest member.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<std::vector<int>> blocks);  // validates + canonicalizes
  static Partition single_block(int n);
  static Partition singletons(int n);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  int block_of(int v) const { return block_of_[v]; }

  bool operator==(const Partition& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

enum class TwinTag { clique_twin, independent_twin, singleton };

struct TwinPartition {
  Partition partition;
  std::vector<TwinTag> tags;  // one per block
};

// Maximal classes of the twin relation N(u)\{v} == N(v)\{u}; every class of
// size >= 2 induces a clique (true twins) or an independent set (false twins).
TwinPartition twin_partition(const Graph& g);

}  // namespace dspec

#endif
