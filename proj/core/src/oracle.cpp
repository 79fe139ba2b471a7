#include "factorkit/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace factorkit {

namespace {

constexpr std::int8_t kUndecided = 0;
constexpr std::int8_t kIn = 1;
constexpr std::int8_t kOut = 2;

// Edge-indexed backtracking over in/out decisions with a decision trail.
// Degree-feasibility is checked on every decision; when `forcing` is on,
// implied decisions (last chance to reach the minimum degree, or a
// parity deficit with one undecided non-loop edge left) are applied
// eagerly. Forced moves never discard completions, so the first
// certificate in canonical order is unaffected.
struct SubsetSearch {
  const Multigraph& g;
  std::vector<int> min_deg;            // per vertex
  const std::vector<char>* parity;     // optional per-vertex parity target
  bool forcing;

  std::vector<std::int8_t> state;
  std::vector<int> chosen;             // decided-in incidences (loops twice)
  std::vector<int> undecided;          // undecided incidences (loops twice)
  std::vector<int> undecided_nonloop;
  std::vector<int> trail;

  SubsetSearch(const Multigraph& graph, std::vector<int> min_degrees,
               const std::vector<char>* parity_target, bool enable_forcing)
      : g(graph),
        min_deg(std::move(min_degrees)),
        parity(parity_target),
        forcing(enable_forcing) {
    state.assign(g.edge_count(), kUndecided);
    chosen.assign(g.vertex_count(), 0);
    undecided.assign(g.vertex_count(), 0);
    undecided_nonloop.assign(g.vertex_count(), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      undecided[e.u] += 1;
      undecided[e.v] += 1;
      if (e.u != e.v) {
        undecided_nonloop[e.u] += 1;
        undecided_nonloop[e.v] += 1;
      }
    }
  }

  bool vertex_ok(int v) const {
    if (chosen[v] + undecided[v] < min_deg[v]) return false;
    if (parity && undecided_nonloop[v] == 0 &&
        (chosen[v] % 2) != (*parity)[v])
      return false;
    return true;
  }

  bool apply(int id, std::int8_t value) {
    state[id] = value;
    trail.push_back(id);
    const Edge& e = g.edge(id);
    int touch = (e.u == e.v) ? 2 : 1;
    for (int side = 0; side < (e.u == e.v ? 1 : 2); ++side) {
      int v = side == 0 ? e.u : e.v;
      undecided[v] -= touch;
      if (e.u != e.v) undecided_nonloop[v] -= 1;
      if (value == kIn) chosen[v] += touch;
    }
    return vertex_ok(e.u) && vertex_ok(e.v);
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      int id = trail.back();
      trail.pop_back();
      const Edge& e = g.edge(id);
      int touch = (e.u == e.v) ? 2 : 1;
      for (int side = 0; side < (e.u == e.v ? 1 : 2); ++side) {
        int v = side == 0 ? e.u : e.v;
        undecided[v] += touch;
        if (e.u != e.v) undecided_nonloop[v] += 1;
        if (state[id] == kIn) chosen[v] -= touch;
      }
      state[id] = kUndecided;
    }
  }

  // Applies every implied decision; false on conflict.
  bool propagate() {
    if (!forcing) return true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (undecided[v] > 0 && chosen[v] + undecided[v] == min_deg[v]) {
          for (const IncidentEdge& ie : g.incident(v)) {
            if (state[ie.edge] != kUndecided) continue;
            if (!apply(ie.edge, kIn)) return false;
            changed = true;
          }
        }
        if (parity && undecided_nonloop[v] == 1) {
          int pending = -1;
          for (const IncidentEdge& ie : g.incident(v))
            if (state[ie.edge] == kUndecided && ie.to != v) pending = ie.edge;
          if (pending == -1) continue;
          bool deficit = (chosen[v] % 2) != (*parity)[v];
          if (!apply(pending, deficit ? kIn : kOut)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  template <typename Accept>
  bool dfs(int next_hint, const Accept& accept) {
    std::size_t mark = trail.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    int id = next_hint;
    while (id < g.edge_count() && state[id] != kUndecided) ++id;
    if (id == g.edge_count()) {
      if (accept()) return true;
      undo(mark);
      return false;
    }
    for (std::int8_t value : {kIn, kOut}) {
      std::size_t branch_mark = trail.size();
      if (apply(id, value) && dfs(id + 1, accept)) return true;
      undo(branch_mark);
    }
    undo(mark);
    return false;
  }

  EdgeSet chosen_edges() const {
    std::vector<int> ids;
    for (int id = 0; id < g.edge_count(); ++id)
      if (state[id] == kIn) ids.push_back(id);
    return EdgeSet(std::move(ids));
  }
};

}  // namespace

std::optional<EdgeSet> brute_x_parity_factor(const Multigraph& g,
                                             const ParityTarget& t,
                                             int max_edges) {
  if (g.edge_count() > max_edges)
    throw std::invalid_argument("brute_x_parity_factor: edge count exceeds the guard");
  if (t.vertex_count() != g.vertex_count())
    throw std::invalid_argument("brute_x_parity_factor: parity target size mismatch");

  std::vector<int> min_deg(g.vertex_count());
  std::vector<char> parity(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    parity[v] = t.is_odd(v) ? 1 : 0;
    min_deg[v] = t.is_odd(v) ? 1 : 2;
  }

  SubsetSearch search(g, std::move(min_deg), &parity, true);
  if (search.dfs(0, [] { return true; })) return search.chosen_edges();
  return std::nullopt;
}

std::optional<EdgeSet> brute_caterpillar_factor(const Multigraph& g,
                                                CaterpillarKind kind,
                                                bool propagation,
                                                int max_edges) {
  int guard = max_edges >= 0 ? max_edges : (propagation ? 40 : 30);
  if (g.edge_count() > guard)
    throw std::invalid_argument("brute_caterpillar_factor: edge count exceeds the guard");
  if (!g.is_simple())
    throw std::invalid_argument("brute_caterpillar_factor: graph must be simple");

  std::vector<int> min_deg(g.vertex_count(), 1);
  std::vector<char> all_odd(g.vertex_count(), 1);
  const std::vector<char>* parity =
      kind == CaterpillarKind::Odd ? &all_odd : nullptr;

  SubsetSearch search(g, std::move(min_deg), parity, propagation);
  auto accept = [&] {
    return verify_caterpillar_factor(g, search.chosen_edges(), kind).ok();
  };
  if (search.dfs(0, accept)) return search.chosen_edges();
  return std::nullopt;
}

namespace {

bool dpll(const CnfFormula& f, std::vector<std::int8_t>& value) {
  // Unit propagation to fixpoint.
  std::vector<int> assigned_here;
  bool changed = true;
  bool conflict = false;
  while (changed && !conflict) {
    changed = false;
    for (const auto& clause : f.clauses) {
      int unassigned = -1;
      bool satisfied = false;
      int open = 0;
      for (const Literal& lit : clause) {
        if (value[lit.var] == -1) {
          ++open;
          unassigned = lit.var;
        } else if ((value[lit.var] == 1) == lit.positive) {
          satisfied = true;
        }
      }
      if (satisfied) continue;
      if (open == 0) {
        conflict = true;
        break;
      }
      if (open == 1) {
        bool want = false;
        for (const Literal& lit : clause)
          if (lit.var == unassigned) want = lit.positive;
        value[unassigned] = want ? 1 : 0;
        assigned_here.push_back(unassigned);
        changed = true;
      }
    }
  }

  if (!conflict) {
    int branch = -1;
    for (int v = 0; v < f.variable_count; ++v)
      if (value[v] == -1) {
        branch = v;
        break;
      }
    if (branch == -1) return true;
    for (int want : {1, 0}) {
      value[branch] = static_cast<std::int8_t>(want);
      if (dpll(f, value)) return true;
      value[branch] = -1;
    }
  }

  for (int v : assigned_here) value[v] = -1;
  return false;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) {
  return rng() % k;
}

template <typename T>
void shuffle_vector(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rand_below(rng, i)]);
}

}  // namespace

std::optional<Assignment> dpll_sat(const CnfFormula& f) {
  if (f.variable_count > 30)
    throw std::invalid_argument("dpll_sat: variable count exceeds the guard");
  std::vector<std::int8_t> value(f.variable_count, -1);
  if (!dpll(f, value)) return std::nullopt;
  Assignment a(f.variable_count);
  for (int v = 0; v < f.variable_count; ++v) a[v] = value[v] == 1;
  return a;
}

Multigraph generate_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_tree: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i)
    edges.push_back({static_cast<int>(rand_below(rng, i)), i});
  return Multigraph(n, std::move(edges));
}

Multigraph generate_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("generate_cubic: n must be even and at least 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle_vector(order, rng);

    // Split into cycles of length >= 3 without leaving a remainder of 1
    // or 2.
    std::vector<Edge> edges;
    int pos = 0;
    while (pos < n) {
      int remaining = n - pos;
      int len;
      if (remaining < 6) {
        len = remaining;  // 3, 4 or 5 must close in one cycle
      } else {
        len = 3 + static_cast<int>(rand_below(rng, remaining - 2));
        if (remaining - len == 1 || remaining - len == 2) len = remaining;
      }
      for (int i = 0; i < len; ++i)
        edges.push_back({order[pos + i], order[pos + (i + 1) % len]});
      pos += len;
    }

    std::vector<int> pairing(n);
    for (int i = 0; i < n; ++i) pairing[i] = i;
    shuffle_vector(pairing, rng);
    for (int i = 0; i < n; i += 2)
      edges.push_back({pairing[i], pairing[i + 1]});

    Multigraph g(n, std::move(edges));
    if (g.is_simple() && is_connected(g)) return g;
  }
  throw std::runtime_error("generate_cubic: retry limit reached");
}

CnfFormula generate_cnf(int variables, int clauses, std::uint64_t seed) {
  if (variables < 3)
    throw std::invalid_argument("generate_cnf: need at least 3 variables");
  if (clauses < 0) throw std::invalid_argument("generate_cnf: negative clause count");
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.variable_count = variables;
  for (int j = 0; j < clauses; ++j) {
    int a, b, c;
    do {
      a = static_cast<int>(rand_below(rng, variables));
      b = static_cast<int>(rand_below(rng, variables));
      c = static_cast<int>(rand_below(rng, variables));
    } while (a == b || a == c || b == c);
    std::array<Literal, 3> clause = {
        Literal{a, rand_below(rng, 2) == 0},
        Literal{b, rand_below(rng, 2) == 0},
        Literal{c, rand_below(rng, 2) == 0},
    };
    f.clauses.push_back(clause);
  }
  return f;
}

Multigraph generate_multigraph(int n, int m, std::uint64_t seed,
                               bool require_connected) {
  if (n < 1) throw std::invalid_argument("generate_multigraph: n must be positive");
  if (m < 0) throw std::invalid_argument("generate_multigraph: negative edge count");
  if (require_connected && m < n - 1)
    throw std::invalid_argument("generate_multigraph: too few edges to connect");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
      int u = static_cast<int>(rand_below(rng, n));
      int v = static_cast<int>(rand_below(rng, n));
      edges.push_back({u, v});
    }
    Multigraph g(n, std::move(edges));
    if (!require_connected || is_connected(g)) return g;
  }
  throw std::runtime_error("generate_multigraph: retry limit reached");
}

}  // namespace factorkit
