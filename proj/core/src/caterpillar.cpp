#include "factorkit/caterpillar.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace factorkit {

namespace {

// Spine / leaf extraction for one tree component given the degrees it
// induces. Fails (returning the offending vertex) when the non-leaf
// vertices do not form a path.
struct SpineScratch {
  std::vector<int> nb_count;
  std::vector<std::array<int, 2>> nb;
  std::vector<int> leaf_nb;

  void ensure(int n) {
    if (static_cast<int>(nb_count.size()) < n) {
      nb_count.assign(n, 0);
      nb.assign(n, {-1, -1});
      leaf_nb.assign(n, -1);
    }
  }
};

bool extract_spine(const Multigraph& g, const std::vector<int>& vertices,
                   const std::vector<int>& edges, const std::vector<int>& deg,
                   SpineScratch& scratch, CaterpillarComponent& out,
                   int* witness) {
  scratch.ensure(g.vertex_count());
  for (int v : vertices) {
    scratch.nb_count[v] = 0;
    scratch.leaf_nb[v] = -1;
  }

  bool path_ok = true;
  int bad_vertex = -1;
  for (int id : edges) {
    int a = g.edge(id).u, b = g.edge(id).v;
    if (deg[a] == 1) scratch.leaf_nb[a] = b;
    if (deg[b] == 1) scratch.leaf_nb[b] = a;
    if (deg[a] >= 2 && deg[b] >= 2) {
      for (int v : {a, b}) {
        int c = scratch.nb_count[v];
        if (c < 2) scratch.nb[v][c] = (v == a) ? b : a;
        scratch.nb_count[v] = c + 1;
        if (c + 1 > 2 && path_ok) {
          path_ok = false;
          bad_vertex = v;
        }
      }
    }
  }
  if (!path_ok) {
    if (witness) *witness = bad_vertex;
    return false;
  }

  std::vector<int> spine_vertices;
  for (int v : vertices)
    if (deg[v] >= 2) spine_vertices.push_back(v);

  if (spine_vertices.empty()) {
    // K2: the smaller vertex stands in for the path.
    out.spine = {vertices[0]};
    out.leaves = {{vertices[1], vertices[0]}};
    return true;
  }

  int start = -1;
  for (int v : spine_vertices)
    if (scratch.nb_count[v] <= 1) {
      start = v;
      break;
    }
  if (start == -1) {  // every spine vertex has two spine neighbours: a cycle
    if (witness) *witness = spine_vertices[0];
    return false;
  }

  out.spine.clear();
  int prev = -1, cur = start;
  while (cur != -1) {
    out.spine.push_back(cur);
    int next = -1;
    for (int c = 0; c < std::min(scratch.nb_count[cur], 2); ++c)
      if (scratch.nb[cur][c] != prev) next = scratch.nb[cur][c];
    prev = cur;
    cur = next;
  }
  if (out.spine.size() != spine_vertices.size()) {
    if (witness) *witness = spine_vertices[0];  // disconnected spine
    return false;
  }

  out.leaves.clear();
  for (int v : vertices)
    if (deg[v] == 1) out.leaves.push_back({v, scratch.leaf_nb[v]});
  return true;
}

}  // namespace

std::optional<std::vector<int>> is_caterpillar(const Multigraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("is_caterpillar: input must be simple");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  if (g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;

  std::vector<int> vertices(n), edges(g.edge_count()), deg(n);
  for (int v = 0; v < n; ++v) {
    vertices[v] = v;
    deg[v] = g.degree(v);
  }
  for (int id = 0; id < g.edge_count(); ++id) edges[id] = id;

  SpineScratch scratch;
  CaterpillarComponent comp;
  if (!extract_spine(g, vertices, edges, deg, scratch, comp, nullptr))
    return std::nullopt;
  return comp.spine;
}

CaterpillarClass classify_caterpillar(const Multigraph& g) {
  if (!is_caterpillar(g))
    throw std::invalid_argument("classify_caterpillar: not a caterpillar");
  bool any_internal = false, all_even = true, all_odd = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d < 2) continue;
    any_internal = true;
    (d % 2 == 0 ? all_odd : all_even) = false;
  }
  if (!any_internal) return CaterpillarClass::Both;
  if (all_even) return CaterpillarClass::Even;
  if (all_odd) return CaterpillarClass::Odd;
  return CaterpillarClass::Neither;
}

CaterpillarCheck verify_caterpillar_factor(const Multigraph& g,
                                           const EdgeSet& s,
                                           CaterpillarKind kind,
                                           bool allow_k2) {
  if (!g.is_simple())
    throw std::invalid_argument("verify_caterpillar_factor: graph must be simple");
  const int n = g.vertex_count();
  CaterpillarCheck result;

  std::vector<int> deg = degrees_in(g, s);
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 0) {
      result.reason = FactorReject::UncoveredVertex;
      result.witness_vertex = v;
      return result;
    }
    if (kind == CaterpillarKind::Odd && deg[v] % 2 == 0) {
      result.reason = FactorReject::ParityViolation;
      result.witness_vertex = v;
      return result;
    }
  }

  ComponentPartition part = components(g, &s);
  std::vector<std::vector<int>> block_edges(part.count());
  for (int id : s) block_edges[part.component[g.edge(id).u]].push_back(id);

  CaterpillarDecomposition decomposition;
  SpineScratch scratch;
  for (int b = 0; b < part.count(); ++b) {
    const std::vector<int>& vertices = part.blocks[b];
    const std::vector<int>& edges = block_edges[b];
    if (edges.size() != vertices.size() - 1) {  // component has a cycle
      result.reason = FactorReject::NonCaterpillarComponent;
      result.witness_vertex = vertices[0];
      return result;
    }

    CaterpillarComponent comp;
    int witness = -1;
    if (!extract_spine(g, vertices, edges, deg, scratch, comp, &witness)) {
      result.reason = FactorReject::NonCaterpillarComponent;
      result.witness_vertex = witness;
      return result;
    }

    bool is_k2 = vertices.size() == 2;
    if (is_k2 && !allow_k2) {
      result.reason = FactorReject::NonCaterpillarComponent;
      result.witness_vertex = vertices[0];
      return result;
    }
    if (!is_k2 && kind == CaterpillarKind::Even) {
      for (int v : vertices) {
        if (deg[v] >= 2 && deg[v] % 2 != 0) {
          result.reason = FactorReject::ParityViolation;
          result.witness_vertex = v;
          return result;
        }
      }
    }

    comp.vertices = vertices;
    comp.edges = edges;
    std::sort(comp.edges.begin(), comp.edges.end());
    decomposition.components.push_back(std::move(comp));
  }

  result.decomposition = std::move(decomposition);
  return result;
}

}  // namespace factorkit
