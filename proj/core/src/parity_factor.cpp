#include "factorkit/parity_factor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "factorkit/oracle.hpp"

namespace factorkit {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

BinarySequence binary_degree_sequence(const Multigraph& g) {
  BinarySequence a(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    a[v] = static_cast<std::uint8_t>(g.degree(v) % 2);
  return a;
}

bool verify_parity_factor(const Multigraph& g, const EdgeSet& s,
                          const ParityTarget& t) {
  std::vector<int> deg = degrees_in(g, s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] < 1) return false;
    if ((deg[v] % 2 != 0) != t.is_odd(v)) return false;
  }
  return true;
}

EdgeSet b_factor_via_slack(const Multigraph& g, const EdgeSet& h,
                           const BinarySequence& b) {
  const int n = g.vertex_count();
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("b_factor_via_slack: sequence size mismatch");
  int ones = 0;
  for (std::uint8_t bit : b) ones += bit;
  if (ones % 2 != 0)
    throw std::invalid_argument("b_factor_via_slack: odd number of ones");

  std::vector<int> hdeg = degrees_in(g, h);
  for (int v = 0; v < n; ++v)
    if (hdeg[v] < 1 || hdeg[v] >= g.degree(v))
      throw std::invalid_argument("b_factor_via_slack: factor lacks degree slack");
  if (components(g, &h).count() != 1)
    throw std::invalid_argument("b_factor_via_slack: factor is not connected");

  BinarySequence a = binary_degree_sequence(g);
  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if ((a[v] ^ b[v]) != 0) odd.push_back(v);
  ParityTarget carve(n, std::move(odd));

  EdgeSet k = parity_spanning_subgraph(g, carve, &h);
  EdgeSet f = edge_complement(g, k);

  std::vector<int> fdeg = degrees_in(g, f);
  for (int v = 0; v < n; ++v)
    if (fdeg[v] < 1 || fdeg[v] % 2 != b[v])
      throw std::logic_error("b_factor_via_slack: carved factor is off target");
  return f;
}

namespace {

// Hamiltonian path with strict degree slack, n <= 12: subset DP from a
// fixed start plus path reconstruction.
std::optional<EdgeSet> slack_hamiltonian_path(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 12 || n < 2) return std::nullopt;

  std::vector<int> tight;  // vertices that must be endpoints
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) <= 1) return std::nullopt;
    if (g.degree(v) == 2) tight.push_back(v);
  }
  if (tight.size() > 2) return std::nullopt;

  // Representative simple adjacency.
  std::vector<std::vector<int>> via(n, std::vector<int>(n, -1));
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.u == e.v) continue;
    if (via[e.u][e.v] == -1) via[e.u][e.v] = via[e.v][e.u] = id;
  }

  std::vector<int> starts;
  if (!tight.empty()) starts.push_back(tight.front());
  else
    for (int v = 0; v < n; ++v) starts.push_back(v);

  const int full = (1 << n) - 1;
  for (int start : starts) {
    std::vector<std::vector<int>> pred(1 << n, std::vector<int>(n, -2));
    pred[1 << start][start] = -1;
    for (int mask = 1; mask <= full; ++mask) {
      for (int v = 0; v < n; ++v) {
        if (pred[mask][v] == -2 || !(mask >> v & 1)) continue;
        for (int u = 0; u < n; ++u) {
          if (via[v][u] == -1 || (mask >> u & 1)) continue;
          int next = mask | (1 << u);
          if (pred[next][u] == -2) pred[next][u] = v;
        }
      }
    }
    for (int end = 0; end < n; ++end) {
      if (end == start || pred[full][end] == -2) continue;
      bool ends_ok = true;
      for (int v : tight)
        if (v != start && v != end) ends_ok = false;
      if (!ends_ok) continue;
      std::vector<int> ids;
      int mask = full, v = end;
      while (pred[mask][v] != -1) {
        int u = pred[mask][v];
        ids.push_back(via[u][v]);
        mask ^= 1 << v;
        v = u;
      }
      return EdgeSet(std::move(ids));
    }
  }
  return std::nullopt;
}

int slack_excess(const Multigraph& g, const std::vector<int>& deg) {
  int total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    total += std::max(0, deg[v] - (g.degree(v) - 1));
  return total;
}

// Spanning-tree local search: swap a tree edge at an over-tight vertex
// for a non-tree edge across the same split whenever that lowers the
// total excess.
std::optional<EdgeSet> slack_tree_local_search(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<char> in_tree(g.edge_count(), 0);
  {
    Dsu dsu(n);
    int taken = 0;
    for (int id = 0; id < g.edge_count() && taken < n - 1; ++id) {
      const Edge& e = g.edge(id);
      if (e.u != e.v && dsu.unite(e.u, e.v)) {
        in_tree[id] = 1;
        ++taken;
      }
    }
    if (taken != n - 1) return std::nullopt;
  }

  auto tree_degrees = [&] {
    std::vector<int> deg(n, 0);
    for (int id = 0; id < g.edge_count(); ++id)
      if (in_tree[id]) {
        ++deg[g.edge(id).u];
        ++deg[g.edge(id).v];
      }
    return deg;
  };

  std::vector<int> deg = tree_degrees();
  int excess = slack_excess(g, deg);
  int rounds = 4 * n + 16;
  while (excess > 0 && rounds-- > 0) {
    bool improved = false;
    for (int out = 0; out < g.edge_count() && !improved; ++out) {
      if (!in_tree[out]) continue;
      const Edge& oe = g.edge(out);
      if (deg[oe.u] < g.degree(oe.u) && deg[oe.v] < g.degree(oe.v)) continue;

      // Side marking of the split induced by removing `out`.
      std::vector<char> side(n, 0);
      std::vector<int> stack{oe.u};
      side[oe.u] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const IncidentEdge& ie : g.incident(v)) {
          if (!in_tree[ie.edge] || ie.edge == out || side[ie.to]) continue;
          side[ie.to] = 1;
          stack.push_back(ie.to);
        }
      }
      for (int in = 0; in < g.edge_count() && !improved; ++in) {
        if (in_tree[in] || in == out) continue;
        const Edge& ne = g.edge(in);
        if (ne.u == ne.v || side[ne.u] == side[ne.v]) continue;
        in_tree[out] = 0;
        in_tree[in] = 1;
        std::vector<int> cand = tree_degrees();
        int cand_excess = slack_excess(g, cand);
        if (cand_excess < excess) {
          deg = std::move(cand);
          excess = cand_excess;
          improved = true;
        } else {
          in_tree[out] = 1;
          in_tree[in] = 0;
        }
      }
    }
    if (!improved) break;
  }
  if (excess > 0) return std::nullopt;

  std::vector<int> ids;
  for (int id = 0; id < g.edge_count(); ++id)
    if (in_tree[id]) ids.push_back(id);
  return EdgeSet(std::move(ids));
}

// Exhaustive search for a spanning tree with deg_T(v) < deg_G(v).
std::optional<EdgeSet> slack_tree_exhaustive(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> cap(n);
  for (int v = 0; v < n; ++v) {
    cap[v] = g.degree(v) - 1;
    if (cap[v] <= 0 && n > 1) return std::nullopt;
  }

  std::vector<int> candidate;
  for (int id = 0; id < g.edge_count(); ++id)
    if (!g.is_loop(id)) candidate.push_back(id);

  std::vector<int> deg(n, 0);
  std::vector<int> picked;

  auto feasible = [&](std::size_t from, const Dsu& base) -> bool {
    Dsu probe = base;
    int comps = n - static_cast<int>(picked.size());
    for (std::size_t i = from; i < candidate.size(); ++i) {
      const Edge& e = g.edge(candidate[i]);
      if (probe.unite(e.u, e.v)) --comps;
    }
    return comps == 1;
  };

  std::optional<EdgeSet> found;
  auto rec = [&](auto&& self, std::size_t i, Dsu dsu) -> bool {
    if (static_cast<int>(picked.size()) == n - 1) {
      found = EdgeSet(picked);
      return true;
    }
    if (i == candidate.size()) return false;
    if (!feasible(i, dsu)) return false;

    const Edge& e = g.edge(candidate[i]);
    if (deg[e.u] < cap[e.u] && deg[e.v] < cap[e.v] &&
        dsu.find(e.u) != dsu.find(e.v)) {
      Dsu next = dsu;
      next.unite(e.u, e.v);
      ++deg[e.u];
      ++deg[e.v];
      picked.push_back(candidate[i]);
      if (self(self, i + 1, std::move(next))) return true;
      picked.pop_back();
      --deg[e.u];
      --deg[e.v];
    }
    return self(self, i + 1, std::move(dsu));
  };
  rec(rec, 0, Dsu(n));
  return found;
}

}  // namespace

std::optional<EdgeSet> find_slack_connected_factor(const Multigraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("find_slack_connected_factor: graph is disconnected");
  const int n = g.vertex_count();
  if (n == 1) {
    if (g.degree(0) > 0) return EdgeSet{};
    return std::nullopt;
  }

  if (auto path = slack_hamiltonian_path(g)) return path;
  if (auto tree = slack_tree_local_search(g)) return tree;
  if (n <= 10) return slack_tree_exhaustive(g);
  return std::nullopt;
}

namespace {

bool on_short_cycle(const Multigraph& g, int v) {
  // A loopless 2-cycle at v: two parallel edges towards the same other
  // endpoint.
  std::map<int, int> multiplicity;
  for (const IncidentEdge& ie : g.incident(v))
    if (ie.to != v && ++multiplicity[ie.to] >= 2) return true;
  // A triangle through v.
  for (const IncidentEdge& a : g.incident(v)) {
    if (a.to == v) continue;
    for (const IncidentEdge& b : g.incident(v)) {
      if (b.to == v || b.to == a.to) continue;
      for (const IncidentEdge& c : g.incident(a.to))
        if (c.to == b.to) return true;
    }
  }
  return false;
}

// First edge id joining a and b, preferring members of `mask` when
// `prefer_in` is set.
int edge_between(const Multigraph& g, int a, int b,
                 const std::vector<char>& mask, bool prefer_in) {
  int any = -1;
  for (const IncidentEdge& ie : g.incident(a)) {
    if (ie.to != b) continue;
    if (mask[ie.edge] == (prefer_in ? 1 : 0)) return ie.edge;
    if (any == -1) any = ie.edge;
  }
  return any;
}

}  // namespace

bool every_vertex_on_short_cycle(const Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!on_short_cycle(g, v)) return false;
  return true;
}

EdgeSet x_parity_factor_triangle(const Multigraph& g, const ParityTarget& t) {
  const int n = g.vertex_count();
  if (!is_connected(g))
    throw std::invalid_argument("x_parity_factor_triangle: graph is disconnected");
  if (t.vertex_count() != n)
    throw std::invalid_argument("x_parity_factor_triangle: parity target size mismatch");
  for (int v = 0; v < n; ++v)
    if (!on_short_cycle(g, v))
      throw std::invalid_argument(
          "x_parity_factor_triangle: vertex " + std::to_string(v) +
          " is on no 2-cycle or 3-cycle");

  BinarySequence a = binary_degree_sequence(g);
  std::vector<int> carved;
  for (int v = 0; v < n; ++v)
    if ((a[v] != 0) != t.is_odd(v)) carved.push_back(v);
  ParityTarget y(n, std::move(carved));

  EdgeSet h0 = parity_spanning_subgraph(g, y);
  std::vector<char> in_h(g.edge_count(), 0);
  int h_size = h0.size();
  for (int id : h0) in_h[id] = 1;
  std::vector<int> hdeg = degrees_in(g, h0);

  auto drop = [&](int id) {
    in_h[id] = 0;
    --h_size;
    hdeg[g.edge(id).u] -= 1;
    hdeg[g.edge(id).v] -= 1;
  };
  auto add = [&](int id) {
    in_h[id] = 1;
    ++h_size;
    hdeg[g.edge(id).u] += 1;
    hdeg[g.edge(id).v] += 1;
  };

  while (true) {
    int before = h_size;
    bool acted = false;

    for (int id = 0; id < g.edge_count() && !acted; ++id)
      if (in_h[id] && g.is_loop(id)) {
        drop(id);
        acted = true;
      }

    for (int a_id = 0; a_id < g.edge_count() && !acted; ++a_id) {
      if (!in_h[a_id] || g.is_loop(a_id)) continue;
      auto key = std::minmax(g.edge(a_id).u, g.edge(a_id).v);
      for (int b_id = a_id + 1; b_id < g.edge_count() && !acted; ++b_id) {
        if (!in_h[b_id] || g.is_loop(b_id)) continue;
        if (key == std::minmax(g.edge(b_id).u, g.edge(b_id).v)) {
          drop(a_id);
          drop(b_id);
          acted = true;
        }
      }
    }

    if (!acted) {
      int saturated = -1;
      for (int v = 0; v < n; ++v)
        if (hdeg[v] == g.degree(v)) {
          saturated = v;
          break;
        }
      if (saturated == -1) break;

      // Every edge at the saturated vertex is in H, so a triangle uvu'
      // gives a switch that lowers |H| and keeps every parity.
      int v = saturated;
      bool switched = false;
      const auto& inc = g.incident(v);
      for (std::size_t i = 0; i < inc.size() && !switched; ++i) {
        if (inc[i].to == v) continue;
        for (std::size_t j = i + 1; j < inc.size() && !switched; ++j) {
          if (inc[j].to == v || inc[j].to == inc[i].to) continue;
          int uu = edge_between(g, inc[i].to, inc[j].to, in_h, true);
          if (uu == -1) continue;
          drop(inc[i].edge);
          drop(inc[j].edge);
          if (in_h[uu]) drop(uu);
          else add(uu);
          switched = true;
        }
      }
      if (!switched)
        throw std::logic_error(
            "x_parity_factor_triangle: saturated vertex admits no switch");
      acted = true;
    }

    if (!acted) break;
    if (h_size >= before)
      throw std::logic_error("x_parity_factor_triangle: switch did not shrink H");
  }

  std::vector<int> kept;
  for (int id = 0; id < g.edge_count(); ++id)
    if (!in_h[id]) kept.push_back(id);
  EdgeSet f(std::move(kept));
  if (!verify_parity_factor(g, f, t))
    throw std::logic_error("x_parity_factor_triangle: result failed verification");
  return f;
}

namespace {

struct Connector {
  int edge;
  int u;       // endpoint inside cycle cu
  int v;       // endpoint inside cycle cv
  int cu;
  int cv;
};

// Arc of a cycle from position `from` walking `dir` steps of +1/-1 until
// position `to` (inclusive).
VertexPath cycle_arc(const Cycle& c, int from, int to, int dir) {
  const int len = static_cast<int>(c.vertices.size());
  VertexPath p;
  int pos = from;
  p.vertices.push_back(c.vertices[pos]);
  while (pos != to) {
    int edge = dir > 0 ? c.edges[pos] : c.edges[(pos - 1 + len) % len];
    pos = (pos + dir + len) % len;
    p.edges.push_back(edge);
    p.vertices.push_back(c.vertices[pos]);
  }
  return p;
}

// Alternating arcs between consecutive marked positions, starting from
// the first marked position at or after the cycle's minimal vertex.
std::vector<VertexPath> alternate_arcs(const Cycle& c,
                                       const std::vector<char>& marked) {
  const int len = static_cast<int>(c.vertices.size());
  int anchor = 0;
  for (int i = 1; i < len; ++i)
    if (c.vertices[i] < c.vertices[anchor]) anchor = i;

  std::vector<int> q;
  for (int off = 0; off < len; ++off) {
    int pos = (anchor + off) % len;
    if (marked[c.vertices[pos]]) q.push_back(pos);
  }
  std::vector<VertexPath> arcs;
  for (std::size_t i = 0; i + 1 < q.size(); i += 2)
    arcs.push_back(cycle_arc(c, q[i], q[i + 1], +1));
  return arcs;
}

}  // namespace

std::vector<VertexPath> select_disjoint_paths(const Multigraph& g,
                                              const std::vector<Cycle>& cycles,
                                              const std::vector<int>& connectors,
                                              const std::vector<int>& z) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(cycles.size());
  if (z.size() % 2 != 0)
    throw std::invalid_argument("select_disjoint_paths: |Z| must be even");

  std::vector<int> cycle_of(n, -1), pos_of(n, -1);
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < static_cast<int>(cycles[c].vertices.size()); ++i) {
      int v = cycles[c].vertices[i];
      if (cycle_of[v] != -1)
        throw std::invalid_argument("select_disjoint_paths: cycles overlap");
      cycle_of[v] = c;
      pos_of[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (cycle_of[v] == -1)
      throw std::invalid_argument("select_disjoint_paths: cycles miss a vertex");

  std::vector<Connector> conn;
  {
    Dsu dsu(k);
    for (int id : connectors) {
      const Edge& e = g.edge(id);
      int cu = cycle_of[e.u], cv = cycle_of[e.v];
      if (cu == cv || !dsu.unite(cu, cv))
        throw std::invalid_argument("select_disjoint_paths: connectors are not a cycle tree");
      conn.push_back({id, e.u, e.v, cu, cv});
    }
    if (static_cast<int>(conn.size()) != k - 1)
      throw std::invalid_argument("select_disjoint_paths: need exactly k-1 connectors");
  }

  std::vector<char> in_z(n, 0);
  for (int v : z) {
    if (v < 0 || v >= n || in_z[v])
      throw std::invalid_argument("select_disjoint_paths: bad Z");
    in_z[v] = 1;
  }

  std::vector<char> cycle_alive(k, 1);
  std::vector<char> conn_alive(conn.size(), 1);
  std::vector<std::vector<int>> conn_at(k);
  for (int j = 0; j < static_cast<int>(conn.size()); ++j) {
    conn_at[conn[j].cu].push_back(j);
    conn_at[conn[j].cv].push_back(j);
  }
  std::vector<int> alive_conn_count(k, 0);
  for (int c = 0; c < k; ++c)
    alive_conn_count[c] = static_cast<int>(conn_at[c].size());

  struct PendingExtension {
    int via_edge;
    VertexPath corridor_v_to_z;  // may be a single vertex
  };
  std::map<int, PendingExtension> pending;
  std::vector<VertexPath> result;

  auto z_members_of = [&](const Cycle& c) {
    std::vector<int> zs;
    for (int v : c.vertices)
      if (in_z[v]) zs.push_back(v);
    return zs;
  };

  int alive = k;
  while (alive > 1) {
    int leaf = -1;
    for (int c = 0; c < k; ++c)
      if (cycle_alive[c] && alive_conn_count[c] == 1) {
        leaf = c;
        break;
      }
    if (leaf == -1)
      throw std::logic_error("select_disjoint_paths: no leaf cycle");

    int j = -1;
    for (int cand : conn_at[leaf])
      if (conn_alive[cand]) j = cand;
    const Connector& link = conn[j];
    int v = link.cu == leaf ? link.u : link.v;
    int w = link.cu == leaf ? link.v : link.u;
    const Cycle& cyc = cycles[leaf];
    const int len = static_cast<int>(cyc.vertices.size());

    std::vector<int> zk = z_members_of(cyc);
    if (zk.size() % 2 == 0) {
      if (!zk.empty()) {
        auto arcs = alternate_arcs(cyc, in_z);
        result.insert(result.end(), arcs.begin(), arcs.end());
      }
      for (int x : zk) in_z[x] = 0;
    } else {
      // Choose the Z vertex closest to v along the cycle; ties go to the
      // smaller vertex id.
      int best = -1, best_dist = std::numeric_limits<int>::max(), best_dir = 1;
      for (int x : zk) {
        int fwd = (pos_of[x] - pos_of[v] + len) % len;
        int bwd = (pos_of[v] - pos_of[x] + len) % len;
        int d = std::min(fwd, bwd);
        if (d < best_dist || (d == best_dist && x < best)) {
          best = x;
          best_dist = d;
          best_dir = fwd <= bwd ? +1 : -1;
        }
      }
      int zstar = best;
      VertexPath corridor = cycle_arc(cyc, pos_of[v], pos_of[zstar], best_dir);

      if (zk.size() > 1) {
        // The open remainder past zstar, avoiding the corridor, holds
        // all other Z vertices of the cycle; split its minimal covering
        // subpath and keep every second piece.
        std::vector<int> open_positions;
        for (int step = 1; step < len; ++step) {
          int pos = (pos_of[zstar] + best_dir * step + len) % len;
          if (pos == pos_of[v]) break;
          open_positions.push_back(pos);
        }
        std::vector<int> marked;  // indices into open_positions
        for (int i = 0; i < static_cast<int>(open_positions.size()); ++i)
          if (in_z[cyc.vertices[open_positions[i]]]) marked.push_back(i);
        if (marked.size() != zk.size() - 1)
          throw std::logic_error("select_disjoint_paths: lost a Z vertex");
        for (std::size_t i = 0; i + 1 < marked.size(); i += 2)
          result.push_back(cycle_arc(cyc, open_positions[marked[i]],
                                     open_positions[marked[i + 1]], best_dir));
      }

      for (int x : zk) in_z[x] = 0;
      if (in_z[w]) {
        VertexPath crossing;  // zstar ... v, then the connector to w
        crossing = cycle_arc(cyc, pos_of[zstar], pos_of[v], -best_dir);
        crossing.edges.push_back(link.edge);
        crossing.vertices.push_back(w);
        result.push_back(std::move(crossing));
        in_z[w] = 0;
      } else {
        pending[w] = {link.edge, std::move(corridor)};
        in_z[w] = 1;
      }
    }

    cycle_alive[leaf] = 0;
    conn_alive[j] = 0;
    --alive;
    --alive_conn_count[leaf];
    --alive_conn_count[link.cu == leaf ? link.cv : link.cu];
  }

  // Base case: the remaining cycle absorbs what is left of Z.
  for (int c = 0; c < k; ++c) {
    if (!cycle_alive[c]) continue;
    std::vector<int> zk = z_members_of(cycles[c]);
    if (zk.size() % 2 != 0)
      throw std::logic_error("select_disjoint_paths: odd residue on the last cycle");
    if (!zk.empty()) {
      auto arcs = alternate_arcs(cycles[c], in_z);
      result.insert(result.end(), arcs.begin(), arcs.end());
    }
    for (int x : zk) in_z[x] = 0;
  }

  // Deferred extensions: a path that ends at a relabeled vertex w grows
  // through the stored connector and corridor; chains may apply.
  for (VertexPath& path : result) {
    bool grown = true;
    while (grown) {
      grown = false;
      for (int side = 0; side < 2; ++side) {
        int tip = side == 0 ? path.vertices.back() : path.vertices.front();
        auto it = pending.find(tip);
        if (it == pending.end()) continue;
        if (side == 1) {
          std::reverse(path.vertices.begin(), path.vertices.end());
          std::reverse(path.edges.begin(), path.edges.end());
        }
        const PendingExtension& ext = it->second;
        path.edges.push_back(ext.via_edge);
        path.vertices.insert(path.vertices.end(),
                             ext.corridor_v_to_z.vertices.begin(),
                             ext.corridor_v_to_z.vertices.end());
        path.edges.insert(path.edges.end(), ext.corridor_v_to_z.edges.begin(),
                          ext.corridor_v_to_z.edges.end());
        pending.erase(it);
        grown = true;
        break;
      }
    }
  }
  if (!pending.empty())
    throw std::logic_error("select_disjoint_paths: unconsumed extension");

  // The contract: endpoints are exactly Z, internals avoid Z, and the
  // paths are vertex-disjoint.
  std::vector<char> seen(n, 0), z_orig(n, 0);
  for (int x : z) z_orig[x] = 1;
  int endpoints = 0;
  for (const VertexPath& p : result) {
    if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1)
      throw std::logic_error("select_disjoint_paths: malformed path");
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      int x = p.vertices[i];
      if (seen[x])
        throw std::logic_error("select_disjoint_paths: paths intersect");
      seen[x] = 1;
      bool endpoint = i == 0 || i + 1 == p.vertices.size();
      if (endpoint != (z_orig[x] != 0))
        throw std::logic_error("select_disjoint_paths: endpoint set is off");
      endpoints += endpoint;
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const Edge& e = g.edge(p.edges[i]);
      if (std::minmax(e.u, e.v) !=
          std::minmax(p.vertices[i], p.vertices[i + 1]))
        throw std::logic_error("select_disjoint_paths: edge mismatch");
    }
  }
  if (endpoints != static_cast<int>(z.size()))
    throw std::logic_error("select_disjoint_paths: endpoint count is off");
  return result;
}

EdgeSet x_parity_factor_cubic(const Multigraph& g, const ParityTarget& t) {
  const int n = g.vertex_count();
  if (!is_connected(g))
    throw std::invalid_argument("x_parity_factor_cubic: graph is disconnected");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 3)
      throw std::invalid_argument("x_parity_factor_cubic: graph is not 3-regular");
  if (!cut_edges_on_path(g))
    throw std::invalid_argument("x_parity_factor_cubic: cut-edges do not lie on one path");
  if (t.vertex_count() != n)
    throw std::invalid_argument("x_parity_factor_cubic: parity target size mismatch");

  auto matching = perfect_matching(g);
  if (!matching)
    throw std::invalid_argument("x_parity_factor_cubic: no perfect matching");
  std::vector<Cycle> cycles = two_factor_cycles(g, *matching);

  std::vector<int> cycle_of(n, -1);
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c)
    for (int v : cycles[c].vertices) cycle_of[v] = c;

  std::vector<int> connectors;
  {
    Dsu dsu(static_cast<int>(cycles.size()));
    for (int id : *matching) {
      const Edge& e = g.edge(id);
      if (cycle_of[e.u] != cycle_of[e.v] &&
          dsu.unite(cycle_of[e.u], cycle_of[e.v]))
        connectors.push_back(id);
    }
  }
  if (static_cast<int>(connectors.size()) != static_cast<int>(cycles.size()) - 1)
    throw std::logic_error("x_parity_factor_cubic: cycle tree did not span");

  std::vector<int> z;
  for (int v = 0; v < n; ++v)
    if (!t.is_odd(v)) z.push_back(v);

  std::vector<VertexPath> paths = select_disjoint_paths(g, cycles, connectors, z);
  std::vector<int> removed;
  for (const VertexPath& p : paths)
    removed.insert(removed.end(), p.edges.begin(), p.edges.end());
  EdgeSet f = edge_complement(g, EdgeSet(std::move(removed)));
  if (!verify_parity_factor(g, f, t))
    throw std::logic_error("x_parity_factor_cubic: result failed verification");
  return f;
}

bool has_strong_parity_property(const Multigraph& g, int max_n) {
  if (!is_connected(g))
    throw std::invalid_argument("has_strong_parity_property: graph is disconnected");
  const int n = g.vertex_count();
  if (n > max_n)
    throw std::invalid_argument(
        "has_strong_parity_property: order " + std::to_string(n) +
        " exceeds the sweep guard (" + std::to_string(max_n) +
        "); use the constructive methods or raise the bound");

  const std::uint64_t limit = n >= 1 ? (1ULL << (n - 1)) : 1;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<int> odd;
    for (int v = 0; v + 1 < n; ++v)
      if (mask >> v & 1) odd.push_back(v);
    if (odd.size() % 2 != 0) odd.push_back(n - 1);
    ParityTarget t(n, std::move(odd));
    if (!brute_x_parity_factor(g, t, std::numeric_limits<int>::max()))
      return false;
  }
  return true;
}

std::vector<Obstruction> detect_obstructions(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<Obstruction> out;

  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1)
      out.push_back({ObstructionKind::DegreeOneVertex, {v}});

  std::set<std::vector<int>> seen_paths;
  if (n > 3) {
    for (int mid = 0; mid < n; ++mid) {
      if (g.degree(mid) != 2) continue;
      const auto& inc = g.incident(mid);
      int a = inc[0].to, b = inc[1].to;
      if (a == mid || b == mid || a == b) continue;
      if (g.degree(a) != 2 || g.degree(b) != 2) continue;
      std::vector<int> witness{std::min(a, b), mid, std::max(a, b)};
      if (seen_paths.insert(witness).second)
        out.push_back({ObstructionKind::DegreeTwoPath, witness});
    }
  }

  EdgeSet cut = bridges(g);
  std::set<std::vector<int>> seen_branch;
  for (int mid = 0; mid < n; ++mid) {
    if (g.degree(mid) != 3) continue;
    const auto& inc = g.incident(mid);
    for (int slot = 0; slot < 3; ++slot) {
      int v4 = inc[slot].to;
      int v1 = inc[(slot + 1) % 3].to;
      int v3 = inc[(slot + 2) % 3].to;
      if (v4 == mid || v1 == mid || v3 == mid) continue;
      if (v1 == v3 || v4 == v1 || v4 == v3) continue;
      if (g.degree(v1) != 2 || g.degree(v3) != 2) continue;
      if (!cut.contains(inc[slot].edge)) continue;

      // Order of mid's component after deleting the vertex v4.
      std::vector<char> reached(n, 0);
      reached[v4] = 1;  // blocked
      std::vector<int> stack{mid};
      reached[mid] = 1;
      int order = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++order;
        for (const IncidentEdge& ie : g.incident(x))
          if (!reached[ie.to]) {
            reached[ie.to] = 1;
            stack.push_back(ie.to);
          }
      }
      if (order < 4) continue;

      std::vector<int> witness{std::min(v1, v3), mid, std::max(v1, v3), v4};
      if (seen_branch.insert(witness).second)
        out.push_back({ObstructionKind::CutEdgeBranch, witness});
    }
  }
  return out;
}

}  // namespace factorkit
