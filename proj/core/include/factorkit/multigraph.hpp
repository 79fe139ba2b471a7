#ifndef FACTORKIT_MULTIGRAPH_HPP
#define FACTORKIT_MULTIGRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factorkit {

struct Edge {
  int u;
  int v;
};

struct IncidentEdge {
  int edge;  // edge id
  int to;    // the other endpoint (equals the vertex itself for a loop)
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed. Edge ids are positions in the edge list; the list is never
// reordered. A loop contributes two entries to its endpoint's incidence
// list, so degree(v) == incident(v).size() with loops counted twice.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<IncidentEdge>& incident(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool is_loop(int id) const { return edges_[id].u == edges_[id].v; }
  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncidentEdge>> adj_;
};

// Sorted set of edge ids into some Multigraph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<int> ids);
  static EdgeSet all_edges(const Multigraph& g);

  bool contains(int id) const;
  void insert(int id);
  void erase(int id);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<int> ids_;
};

struct ComponentPartition {
  std::vector<int> component;             // vertex -> block index
  std::vector<std::vector<int>> blocks;   // block -> vertices, ascending
  int count() const { return static_cast<int>(blocks.size()); }
};

// A closed walk: edges[i] joins vertices[i] and vertices[(i+1) % k].
// Lengths 1 (loop) and 2 (parallel pair) are legal cycles.
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Text format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are comments. Duplicate lines are parallel
// edges and u == v is a loop; edge id = 0-based occurrence index.
Multigraph parse_graph(std::string_view text);
std::string render_graph(const Multigraph& g);

// Degrees induced by an edge subset, loops counted twice.
std::vector<int> degrees_in(const Multigraph& g, const EdgeSet& s);

EdgeSet edge_complement(const Multigraph& g, const EdgeSet& s);

// Connected components, optionally restricted to a subset of edges.
// Isolated vertices form singleton blocks.
ComponentPartition components(const Multigraph& g,
                              const EdgeSet* restrict_to = nullptr);

bool is_connected(const Multigraph& g);

// Exactly the edges whose removal increases the number of components.
// Loops and members of parallel bundles are never bridges.
EdgeSet bridges(const Multigraph& g);

// True iff some path of (connected) g contains every bridge. Decided on
// the bridge-block tree: all bridges lie on one path iff that tree is a
// path.
bool cut_edges_on_path(const Multigraph& g);

// Exact search for a perfect matching; loops are never usable.
// Deterministic: vertices in increasing id order, incident edges in id
// order, with memoized failure states. Intended for small graphs.
std::optional<EdgeSet> perfect_matching(const Multigraph& g);

// Components of G - M for a 3-regular g and perfect matching m, each
// traced as a cycle. Covers every vertex exactly once.
std::vector<Cycle> two_factor_cycles(const Multigraph& g, const EdgeSet& m);

}  // namespace factorkit

#endif
