#include "factorkit/parity_join.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace factorkit {

ParityTarget::ParityTarget(int n, std::vector<int> odd_vertices)
    : n_(n), odd_(std::move(odd_vertices)), mask_(n, 0) {
  std::sort(odd_.begin(), odd_.end());
  odd_.erase(std::unique(odd_.begin(), odd_.end()), odd_.end());
  for (int v : odd_) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("parity target vertex out of range");
    mask_[v] = 1;
  }
  if (odd_.size() % 2 != 0)
    throw std::invalid_argument("parity target needs an even number of odd vertices");
}

bool matches_parity(const Multigraph& g, const EdgeSet& s,
                    const ParityTarget& t) {
  std::vector<int> deg = degrees_in(g, s);
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((deg[v] % 2 != 0) != t.is_odd(v)) return false;
  return true;
}

namespace {

std::vector<char> edge_mask(const Multigraph& g, const EdgeSet* s) {
  std::vector<char> mask(g.edge_count(), s ? 0 : 1);
  if (s)
    for (int id : *s) mask[id] = 1;
  return mask;
}

// BFS over allowed edges; returns the edge ids of a shortest from-to path.
std::vector<int> shortest_path_edges(const Multigraph& g,
                                     const std::vector<char>& allowed,
                                     int from, int to) {
  std::vector<int> parent_edge(g.vertex_count(), -1);
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const IncidentEdge& ie : g.incident(v)) {
      if (!allowed[ie.edge] || seen[ie.to]) continue;
      seen[ie.to] = 1;
      parent[ie.to] = v;
      parent_edge[ie.to] = ie.edge;
      queue.push_back(ie.to);
    }
  }
  if (!seen[to])
    throw std::invalid_argument("parity_spanning_subgraph: graph is disconnected");
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
  return path;
}

}  // namespace

EdgeSet parity_spanning_subgraph(const Multigraph& g, const ParityTarget& t,
                                 const EdgeSet* restrict_to) {
  if (t.vertex_count() != g.vertex_count())
    throw std::invalid_argument("parity target size mismatch");
  const int n = g.vertex_count();
  std::vector<char> allowed = edge_mask(g, restrict_to);

  // DFS discovery order doubles as the connectivity check.
  std::vector<int> order;
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (const IncidentEdge& ie : g.incident(v)) {
        if (!allowed[ie.edge] || seen[ie.to]) continue;
        seen[ie.to] = 1;
        stack.push_back(ie.to);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("parity_spanning_subgraph: graph is disconnected");

  std::vector<int> waiting;
  for (int v : order)
    if (t.is_odd(v)) waiting.push_back(v);

  std::vector<int> use_count(g.edge_count(), 0);
  for (size_t i = 0; i + 1 < waiting.size(); i += 2)
    for (int id : shortest_path_edges(g, allowed, waiting[i], waiting[i + 1]))
      ++use_count[id];

  std::vector<int> kept;
  for (int id = 0; id < g.edge_count(); ++id)
    if (use_count[id] % 2 != 0) kept.push_back(id);
  return EdgeSet(std::move(kept));
}

namespace {

struct SwitchCycle {
  std::vector<int> edges;
};

// Every simple cycle of g: loops, parallel pairs, and vertex cycles of
// length >= 3 with one concrete parallel edge chosen per step.
std::vector<SwitchCycle> enumerate_cycles(const Multigraph& g) {
  std::vector<SwitchCycle> out;
  for (int id = 0; id < g.edge_count(); ++id)
    if (g.is_loop(id)) out.push_back({{id}});
  for (int a = 0; a < g.edge_count(); ++a) {
    if (g.is_loop(a)) continue;
    for (int b = a + 1; b < g.edge_count(); ++b) {
      if (g.is_loop(b)) continue;
      auto ka = std::minmax(g.edge(a).u, g.edge(a).v);
      auto kb = std::minmax(g.edge(b).u, g.edge(b).v);
      if (ka == kb) out.push_back({{a, b}});
    }
  }

  // Vertex cycles: simple paths from a minimal start vertex using only
  // larger vertices, closed by an edge back to the start.
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path_edges;
  std::vector<int> path_vertices;
  auto extend = [&](auto&& self, int start, int v) -> void {
    for (const IncidentEdge& ie : g.incident(v)) {
      if (ie.to == v) continue;
      if (ie.to == start) {
        if (path_vertices.size() >= 3 &&
            ie.edge > path_edges.front()) {  // canonical closing edge
          SwitchCycle c;
          c.edges = path_edges;
          c.edges.push_back(ie.edge);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (ie.to < start || on_path[ie.to]) continue;
      on_path[ie.to] = 1;
      path_vertices.push_back(ie.to);
      path_edges.push_back(ie.edge);
      self(self, start, ie.to);
      path_edges.pop_back();
      path_vertices.pop_back();
      on_path[ie.to] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    path_vertices.assign(1, s);
    path_edges.clear();
    extend(extend, s, s);
    on_path[s] = 0;
  }
  return out;
}

// Loops, parallel pairs and triangles only; the moves the saturated
// vertex argument needs on larger inputs.
std::vector<SwitchCycle> enumerate_short_cycles(const Multigraph& g) {
  std::vector<SwitchCycle> out;
  for (int id = 0; id < g.edge_count(); ++id)
    if (g.is_loop(id)) out.push_back({{id}});
  for (int a = 0; a < g.edge_count(); ++a) {
    if (g.is_loop(a)) continue;
    auto ka = std::minmax(g.edge(a).u, g.edge(a).v);
    for (int b = a + 1; b < g.edge_count(); ++b) {
      if (g.is_loop(b)) continue;
      if (ka == std::minmax(g.edge(b).u, g.edge(b).v))
        out.push_back({{a, b}});
    }
  }
  for (int a = 0; a < g.edge_count(); ++a) {
    if (g.is_loop(a)) continue;
    for (int b = a + 1; b < g.edge_count(); ++b) {
      if (g.is_loop(b)) continue;
      for (int c = b + 1; c < g.edge_count(); ++c) {
        if (g.is_loop(c)) continue;
        int u[3] = {g.edge(a).u, g.edge(b).u, g.edge(c).u};
        int v[3] = {g.edge(a).v, g.edge(b).v, g.edge(c).v};
        std::vector<int> verts = {u[0], v[0], u[1], v[1], u[2], v[2]};
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.size() != 3) continue;
        // each vertex must appear in exactly two of the three edges
        bool ok = true;
        for (int w : verts) {
          int cnt = 0;
          for (int i = 0; i < 3; ++i) cnt += (u[i] == w) + (v[i] == w);
          if (cnt != 2) ok = false;
        }
        if (ok) out.push_back({{a, b, c}});
      }
    }
  }
  return out;
}

}  // namespace

EdgeSet local_minimize(const Multigraph& g, const ParityTarget& t,
                       const EdgeSet& h, int full_enumeration_bound) {
  if (!matches_parity(g, h, t))
    throw std::invalid_argument("local_minimize: input does not satisfy the parity target");

  std::vector<SwitchCycle> cycles =
      g.vertex_count() <= full_enumeration_bound ? enumerate_cycles(g)
                                                 : enumerate_short_cycles(g);

  std::vector<char> in_h(g.edge_count(), 0);
  for (int id : h) in_h[id] = 1;

  bool switched = true;
  while (switched) {
    switched = false;
    for (const SwitchCycle& c : cycles) {
      int inside = 0;
      for (int id : c.edges) inside += in_h[id];
      if (2 * inside > static_cast<int>(c.edges.size())) {
        for (int id : c.edges) in_h[id] ^= 1;
        switched = true;
      }
    }
  }

  std::vector<int> kept;
  for (int id = 0; id < g.edge_count(); ++id)
    if (in_h[id]) kept.push_back(id);
  return EdgeSet(std::move(kept));
}

}  // namespace factorkit
