#include "odg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "odg/errors.hpp"

namespace odg {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.assign(n_, std::vector<bool>(n_, false));
}

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u][v] = true;
  adj_[v][u] = true;
}

int Graph::degree(int v) const {
  return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), true));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[v][u]) out.push_back(u);
  return out;
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

void Graph::set_annotations(std::vector<VertexInfo> info) {
  if (static_cast<int>(info.size()) != n_)
    throw std::invalid_argument("annotations must cover every vertex");
  info_ = std::move(info);
}

Graph independent_set(int k) { return Graph(k); }

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

// ---- Connectivity ------------------------------------------------------

namespace {

// BFS distances from source; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::optional<int> diameter(const Graph& g) {
  if (g.vertex_count() < 1) throw std::invalid_argument("diameter requires a vertex");
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.vertex_count() - 1) return false;
  return true;
}

// ---- Shape classifiers ---------------------------------------------------

std::optional<int> is_star(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (n == 1) return 0;
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      center = v;
      break;
    }
  }
  if (center < 0) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (v != center && g.degree(v) != 1) return std::nullopt;
  }
  return center;
}

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::star: return "star";
    case PartitionKind::complete_multipartite: return "complete_multipartite";
    case PartitionKind::other: return "other";
  }
  return "other";
}

std::optional<PartitionReport> complete_multipartite_parts(const Graph& g) {
  const int n = g.vertex_count();
  // Parts are the connected components of the complement; they must be
  // complement-cliques, i.e. independent sets fully joined to each other.
  std::vector<int> part_of(n, -1);
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < n; ++v) {
    if (part_of[v] >= 0) continue;
    std::vector<int> part{v};
    part_of[v] = static_cast<int>(parts.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (int u = 0; u < n; ++u) {
        if (part_of[u] < 0 && u != part[i] && !g.adjacent(part[i], u)) {
          part_of[u] = part_of[v];
          part.push_back(u);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  // Valid iff non-adjacency is transitive over the parts: every within-part
  // pair non-adjacent (complement clique) — cross pairs are adjacent by
  // construction of the components.
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (g.adjacent(part[i], part[j])) return std::nullopt;
  }
  PartitionReport report;
  report.parts = std::move(parts);
  for (const auto& part : report.parts)
    report.part_sizes.push_back(static_cast<int>(part.size()));
  std::sort(report.part_sizes.begin(), report.part_sizes.end());
  report.kind = is_star(g).has_value() ? PartitionKind::star
                                       : PartitionKind::complete_multipartite;
  return report;
}

// ---- Twins and reduction ---------------------------------------------------

namespace {

std::vector<std::vector<int>> group_by_key(
    const std::vector<std::pair<std::vector<bool>, std::int64_t>>& keys) {
  std::map<std::pair<std::vector<bool>, std::int64_t>, int> first;
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < static_cast<int>(keys.size()); ++v) {
    auto [it, inserted] = first.try_emplace(keys[v], static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::vector<std::pair<std::vector<bool>, std::int64_t>> neighborhood_keys(
    const Graph& g, bool closed, bool use_tags) {
  std::vector<std::pair<std::vector<bool>, std::int64_t>> keys;
  keys.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> row(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) row[u] = g.adjacent(v, u);
    if (closed) row[v] = true;
    keys.emplace_back(std::move(row), use_tags ? g.info(v).order_tag : 0);
  }
  return keys;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

}  // namespace

TwinClasses twin_classes(const Graph& g) {
  TwinClasses out;
  out.open_classes = group_by_key(neighborhood_keys(g, false, false));
  out.closed_classes = group_by_key(neighborhood_keys(g, true, false));
  return out;
}

Graph reduced_graph(const Graph& g) {
  const int n = g.vertex_count();
  const bool tags = g.annotated();
  UnionFind uf(n);
  for (bool closed : {false, true}) {
    for (const auto& cls : group_by_key(neighborhood_keys(g, closed, tags))) {
      for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[0], cls[i]);
    }
  }
  // Classes ordered by smallest member.
  std::vector<int> class_of(n, -1);
  std::vector<int> representative;
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (class_of[root] < 0) {
      class_of[root] = static_cast<int>(representative.size());
      representative.push_back(v);
    }
    class_of[v] = class_of[root];
  }
  Graph out(static_cast<int>(representative.size()));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) && class_of[u] != class_of[v])
        if (!out.adjacent(class_of[u], class_of[v]))
          out.add_edge(class_of[u], class_of[v]);
    }
  }
  if (tags) {
    std::vector<VertexInfo> info;
    info.reserve(representative.size());
    for (int rep : representative) info.push_back(g.info(rep));
    out.set_annotations(std::move(info));
  }
  return out;
}

// ---- Joins -----------------------------------------------------------------

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross_edges) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  Graph out(n1 + n2);
  for (const auto& [u, v] : g1.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
  if (cross_edges) {
    for (int u = 0; u < n1; ++u)
      for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
  }
  if (g1.annotated() && g2.annotated()) {
    std::vector<VertexInfo> info = g1.annotations();
    info.insert(info.end(), g2.annotations().begin(), g2.annotations().end());
    out.set_annotations(std::move(info));
  }
  return out;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return combine(g1, g2, false); }

Graph join(const Graph& g1, const Graph& g2) { return combine(g1, g2, true); }

Graph sequential_join(const std::vector<Graph>& graphs) {
  if (graphs.empty()) return Graph(0);
  Graph out = graphs[0];
  int prev_offset = 0;
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    const int prev_size = out.vertex_count() - prev_offset;
    const int offset = out.vertex_count();
    out = disjoint_union(out, graphs[i]);
    // Join only the vertices of the previous block to the new block.
    for (int u = prev_offset; u < prev_offset + prev_size; ++u)
      for (int v = offset; v < out.vertex_count(); ++v) out.add_edge(u, v);
    prev_offset = offset;
  }
  return out;
}

// ---- Coloring ------------------------------------------------------------

namespace {

// Greedy clique: repeatedly add the highest-degree vertex adjacent to all
// chosen so far.
std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int c : clique) {
      if (!g.adjacent(v, c)) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(v);
  }
  return clique;
}

// Longest chain of distinct order tags under divisibility; one vertex per
// tag. Only usable as a clique when the chosen vertices really are pairwise
// adjacent, which the caller verifies.
std::vector<int> divisor_chain_candidate(const Graph& g) {
  if (!g.annotated()) return {};
  std::map<std::int64_t, int> first_vertex;
  for (int v = 0; v < g.vertex_count(); ++v)
    first_vertex.try_emplace(g.info(v).order_tag, v);
  std::vector<std::int64_t> tags;
  for (const auto& [tag, v] : first_vertex) {
    (void)v;
    if (tag > 0) tags.push_back(tag);
  }
  const int k = static_cast<int>(tags.size());
  std::vector<int> best_len(k, 1), prev(k, -1);
  int best_end = k > 0 ? 0 : -1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      if (tags[i] % tags[j] == 0 && best_len[j] + 1 > best_len[i]) {
        best_len[i] = best_len[j] + 1;
        prev[i] = j;
      }
    }
    if (best_end < 0 || best_len[i] > best_len[best_end]) best_end = i;
  }
  std::vector<int> chain;
  for (int i = best_end; i >= 0; i = prev[i]) chain.push_back(first_vertex.at(tags[i]));
  return chain;
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

int greedy_coloring_bound(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.vertex_count(), -1);
  int used = 0;
  for (int v : order) {
    std::vector<bool> taken(used + 1, false);
    for (int u : g.neighbors(v))
      if (color[u] >= 0) taken[color[u]] = true;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

// DSATUR-ordered backtracking k-colorability with new-color symmetry breaking.
bool extend_coloring(const Graph& g, int k, std::vector<int>& color, int colored,
                     int max_used) {
  const int n = g.vertex_count();
  if (colored == n) return true;
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (color[v] >= 0) continue;
    std::vector<bool> seen(k, false);
    int sat = 0;
    for (int u : g.neighbors(v)) {
      if (color[u] >= 0 && !seen[color[u]]) {
        seen[color[u]] = true;
        ++sat;
      }
    }
    const int deg = g.degree(v);
    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = deg;
    }
  }
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (int u : g.neighbors(pick)) {
      if (color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[pick] = c;
    if (extend_coloring(g, k, color, colored + 1, std::max(max_used, c))) return true;
    color[pick] = -1;
  }
  return false;
}

bool k_colorable(const Graph& g, int k) {
  std::vector<int> color(g.vertex_count(), -1);
  return extend_coloring(g, k, color, 0, -1);
}

// Quotient by open-neighborhood twins only (no tag refinement): exactly the
// chromatic-preserving reduction. Distinct from reduced_graph, whose
// closed-twin rule merges adjacent vertices and would change the coloring.
Graph reduced_graph_open_only(const Graph& g) {
  const int n = g.vertex_count();
  const auto classes = group_by_key(neighborhood_keys(g, false, false));
  std::vector<int> class_of(n);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (int v : classes[c]) class_of[v] = c;
  Graph out(static_cast<int>(classes.size()));
  for (const auto& [u, v] : g.edges()) {
    if (class_of[u] != class_of[v] && !out.adjacent(class_of[u], class_of[v]))
      out.add_edge(class_of[u], class_of[v]);
  }
  if (g.annotated()) {
    std::vector<VertexInfo> info;
    for (const auto& cls : classes) info.push_back(g.info(cls[0]));
    out.set_annotations(std::move(info));
  }
  return out;
}

}  // namespace

int chromatic_number(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw cap_exceeded("chromatic_number: " + std::to_string(g.vertex_count()) +
                       " vertices exceeds cap " + std::to_string(cap));
  if (g.vertex_count() == 0) return 0;
  // Coloring is invariant under merging open-neighborhood twins: the quotient
  // is an induced subgraph and any proper quotient coloring lifts class-wide.
  const Graph q = reduced_graph_open_only(g);
  if (q.edge_count() == 0) return 1;
  int lower = static_cast<int>(greedy_clique(q).size());
  const auto chain = divisor_chain_candidate(q);
  if (static_cast<int>(chain.size()) > lower && is_clique(q, chain))
    lower = static_cast<int>(chain.size());
  const int upper = greedy_coloring_bound(q);
  for (int k = lower; k < upper; ++k) {
    if (k_colorable(q, k)) return k;
  }
  return upper;
}

// ---- Isomorphism -------------------------------------------------------------

namespace {

// Per-vertex invariant for pruning: (external label, degree, sorted multiset
// of neighbor degrees).
struct VertexKey {
  std::int64_t label;
  int degree;
  std::vector<int> neighbor_degrees;
  friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

std::vector<VertexKey> vertex_keys(const Graph& g, const std::vector<std::int64_t>& labels) {
  std::vector<VertexKey> keys(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    keys[v].label = labels.empty() ? 0 : labels[v];
    keys[v].degree = g.degree(v);
    for (int u : g.neighbors(v)) keys[v].neighbor_degrees.push_back(g.degree(u));
    std::sort(keys[v].neighbor_degrees.begin(), keys[v].neighbor_degrees.end());
  }
  return keys;
}

bool extend_mapping(const Graph& g1, const Graph& g2, const std::vector<int>& order,
                    std::size_t depth, const std::vector<std::vector<int>>& candidates,
                    std::vector<int>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (int w : candidates[v]) {
    if (used[w]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int u = order[i];
      ok = g1.adjacent(v, u) == g2.adjacent(w, map[u]);
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_mapping(g1, g2, order, depth + 1, candidates, map, used)) return true;
    used[w] = false;
    map[v] = -1;
  }
  return false;
}

std::optional<std::vector<int>> labeled_backtracking(
    const Graph& g1, const Graph& g2, const std::vector<std::int64_t>& labels1,
    const std::vector<std::int64_t>& labels2) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  const auto keys1 = vertex_keys(g1, labels1);
  const auto keys2 = vertex_keys(g2, labels2);
  {
    auto sorted1 = keys1, sorted2 = keys2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w)
      if (keys1[v] == keys2[w]) candidates[v].push_back(w);
    if (candidates[v].empty()) return std::nullopt;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (candidates[a].size() != candidates[b].size())
      return candidates[a].size() < candidates[b].size();
    return g1.degree(a) > g1.degree(b);
  });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (extend_mapping(g1, g2, order, 0, candidates, map, used)) return map;
  return std::nullopt;
}

struct QuotientData {
  Graph graph{0};
  std::vector<std::vector<int>> classes;
  std::vector<std::int64_t> sizes;
};

QuotientData open_twin_quotient(const Graph& g) {
  QuotientData q;
  q.classes = group_by_key(neighborhood_keys(g, false, false));
  std::vector<int> class_of(g.vertex_count());
  for (int c = 0; c < static_cast<int>(q.classes.size()); ++c) {
    for (int v : q.classes[c]) class_of[v] = c;
    q.sizes.push_back(static_cast<std::int64_t>(q.classes[c].size()));
  }
  q.graph = Graph(static_cast<int>(q.classes.size()));
  for (const auto& [u, v] : g.edges()) {
    if (class_of[u] == class_of[v])
      throw std::logic_error("open-twin class is not independent");
    if (!q.graph.adjacent(class_of[u], class_of[v]))
      q.graph.add_edge(class_of[u], class_of[v]);
  }
  return q;
}

}  // namespace

std::optional<std::vector<int>> backtracking_isomorphism(const Graph& g1,
                                                         const Graph& g2) {
  return labeled_backtracking(g1, g2, {}, {});
}

std::optional<std::vector<int>> twin_quotient_isomorphism(const Graph& g1,
                                                          const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  const QuotientData q1 = open_twin_quotient(g1);
  const QuotientData q2 = open_twin_quotient(g2);
  if (q1.graph.vertex_count() > 32 || q2.graph.vertex_count() > 32)
    throw cap_exceeded("twin_quotient_isomorphism: quotient exceeds 32 vertices");
  const auto qmap = labeled_backtracking(q1.graph, q2.graph, q1.sizes, q2.sizes);
  if (!qmap) return std::nullopt;
  // Lift: classes match in size, so pair members in ascending order.
  std::vector<int> map(g1.vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(q1.classes.size()); ++c) {
    const auto& from = q1.classes[c];
    const auto& to = q2.classes[(*qmap)[c]];
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
  }
  return map;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() <= 16 && g2.vertex_count() <= 16)
    return backtracking_isomorphism(g1, g2);
  return twin_quotient_isomorphism(g1, g2);
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace odg
