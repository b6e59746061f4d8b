#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odg {

struct VertexInfo {
  std::string label;
  std::int64_t order_tag = 0;
  friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

// Simple undirected graph: symmetric irreflexive adjacency over
// 0..vertex_count-1, with optional per-vertex annotations. Treated as
// immutable once built.
class Graph {
 public:
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u][v]; }
  void add_edge(int u, int v);
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::int64_t edge_count() const;
  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool annotated() const { return !info_.empty(); }
  const std::vector<VertexInfo>& annotations() const { return info_; }
  void set_annotations(std::vector<VertexInfo> info);
  const VertexInfo& info(int v) const { return info_[v]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<std::vector<bool>> adj_;
  std::vector<VertexInfo> info_;  // empty or size n_
};

// ---- Small builders ----------------------------------------------------

Graph independent_set(int k);
Graph complete_graph(int k);

// ---- Connectivity ------------------------------------------------------

bool is_connected(const Graph& g);
// Max eccentricity; nullopt means infinite (disconnected). Requires >= 1 vertex.
std::optional<int> diameter(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_complete(const Graph& g);

// ---- Shape classifiers ---------------------------------------------------

// Center of the star K_{1,m-1} if g is one; a single vertex counts as a
// degenerate star centered on itself. For K_2 the smaller index is returned.
std::optional<int> is_star(const Graph& g);

enum class PartitionKind { star, complete_multipartite, other };

std::string to_string(PartitionKind kind);

struct PartitionReport {
  std::vector<std::vector<int>> parts;  // ordered by smallest contained vertex
  PartitionKind kind = PartitionKind::other;
  std::vector<int> part_sizes;  // ascending multiset
};

// Succeeds iff the complement of g is a disjoint union of cliques; the parts
// are those cliques. kind is star when g is also a star.
std::optional<PartitionReport> complete_multipartite_parts(const Graph& g);

// ---- Coloring ------------------------------------------------------------

inline constexpr int kDefaultChromaticCap = 128;

// Exact chromatic number via branch and bound (clique lower bound, greedy
// upper bound, backtracking in between). Refuses graphs above the cap.
int chromatic_number(const Graph& g, int cap = kDefaultChromaticCap);

// ---- Twins and reduction ---------------------------------------------------

struct TwinClasses {
  // Both partitions ordered by smallest contained vertex.
  std::vector<std::vector<int>> open_classes;    // equal open neighborhoods
  std::vector<std::vector<int>> closed_classes;  // equal closed neighborhoods
};

TwinClasses twin_classes(const Graph& g);

// Quotient of g merging twin vertices: classes are generated by equal open
// or equal closed neighborhoods, refined by the order_tag annotation when
// present (so distinct-order vertices never merge). Merged vertices are
// adjacent iff their classes were adjacent in g; annotations carry over
// from the smallest vertex of each class.
Graph reduced_graph(const Graph& g);

// ---- Joins -----------------------------------------------------------------

Graph disjoint_union(const Graph& g1, const Graph& g2);
// Disjoint union plus all cross edges.
Graph join(const Graph& g1, const Graph& g2);
// Folds join pairwise: G_1 * G_2 * ... * G_k with consecutive graphs joined.
Graph sequential_join(const std::vector<Graph>& graphs);

// ---- Isomorphism -------------------------------------------------------------

// Strategy A: plain backtracking with degree / neighbor-degree-multiset
// pruning. Exact for any size, intended for <= 16 vertices.
std::optional<std::vector<int>> backtracking_isomorphism(const Graph& g1,
                                                         const Graph& g2);

// Strategy B: quotient both graphs by open-neighborhood twin classes and
// look for a class-size-preserving isomorphism of the quotients. Exact
// because open-twin classes are independent sets and class pairs are joined
// all-or-nothing. Refuses when a quotient exceeds 32 vertices.
std::optional<std::vector<int>> twin_quotient_isomorphism(const Graph& g1,
                                                          const Graph& g2);

// Dispatcher: strategy A up to 16 vertices, strategy B beyond.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);
bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace odg
