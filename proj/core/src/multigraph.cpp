#include "factorkit/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stack>
#include <stdexcept>
#include <unordered_set>

#include "factorkit/errors.hpp"

namespace factorkit {

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(n_);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    adj_[e.u].push_back({id, e.v});
    adj_[e.v].push_back({id, e.u});  // loops end up listed twice
  }
}

bool Multigraph::has_loops() const {
  for (const Edge& e : edges_)
    if (e.u == e.v) return true;
  return false;
}

bool Multigraph::has_parallel_edges() const {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.push_back(std::minmax(e.u, e.v));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

EdgeSet::EdgeSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

EdgeSet EdgeSet::all_edges(const Multigraph& g) {
  std::vector<int> ids(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) ids[i] = i;
  EdgeSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool EdgeSet::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void EdgeSet::insert(int id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void EdgeSet::erase(int id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) ids_.erase(it);
}

namespace {

// Splits off the next line and reports its 1-based number.
struct LineReader {
  std::string_view text;
  int line_no = 0;

  std::optional<std::string_view> next() {
    while (!text.empty()) {
      size_t nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = (nl == std::string_view::npos) ? std::string_view{}
                                            : text.substr(nl + 1);
      ++line_no;
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) continue;  // blank
      if (line[start] == '#') continue;               // comment
      return line;
    }
    return std::nullopt;
  }
};

std::vector<long long> parse_ints(std::string_view line, int line_no,
                                  size_t expected) {
  std::vector<long long> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    try {
      size_t pos = 0;
      long long value = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", line_no);
    }
  }
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) +
                         " integers, got " + std::to_string(out.size()),
                     line_no);
  return out;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  LineReader reader{text};
  auto header = reader.next();
  if (!header) throw ParseError("missing 'n m' header", reader.line_no);
  auto hv = parse_ints(*header, reader.line_no, 2);
  long long n = hv[0], m = hv[1];
  if (n < 0 || m < 0 || n > (1 << 30) || m > (1 << 30))
    throw ParseError("malformed header", reader.line_no);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    auto line = reader.next();
    if (!line)
      throw ParseError("expected " + std::to_string(m) + " edges, got " +
                           std::to_string(i),
                       reader.line_no);
    auto ev = parse_ints(*line, reader.line_no, 2);
    if (ev[0] < 0 || ev[0] >= n || ev[1] < 0 || ev[1] >= n)
      throw ParseError("endpoint out of range", reader.line_no);
    edges.push_back({static_cast<int>(ev[0]), static_cast<int>(ev[1])});
  }
  if (reader.next())
    throw ParseError("trailing content after edge list", reader.line_no);
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string render_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<int> degrees_in(const Multigraph& g, const EdgeSet& s) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (int id : s) {
    const Edge& e = g.edge(id);
    deg[e.u] += 1;
    deg[e.v] += 1;  // a loop hits this twice for the same vertex
  }
  return deg;
}

EdgeSet edge_complement(const Multigraph& g, const EdgeSet& s) {
  std::vector<int> out;
  out.reserve(g.edge_count() - s.size());
  for (int id = 0; id < g.edge_count(); ++id)
    if (!s.contains(id)) out.push_back(id);
  return EdgeSet(std::move(out));
}

ComponentPartition components(const Multigraph& g,
                              const EdgeSet* restrict_to) {
  const int n = g.vertex_count();
  std::vector<char> allowed;
  if (restrict_to) {
    allowed.assign(g.edge_count(), 0);
    for (int id : *restrict_to) allowed[id] = 1;
  }

  ComponentPartition part;
  part.component.assign(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (part.component[s] != -1) continue;
    int block = part.count();
    part.blocks.emplace_back();
    part.component[s] = block;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.blocks[block].push_back(v);
      for (const IncidentEdge& ie : g.incident(v)) {
        if (restrict_to && !allowed[ie.edge]) continue;
        if (part.component[ie.to] == -1) {
          part.component[ie.to] = block;
          stack.push_back(ie.to);
        }
      }
    }
    std::sort(part.blocks[block].begin(), part.blocks[block].end());
  }
  return part;
}

bool is_connected(const Multigraph& g) {
  return g.vertex_count() <= 1 || components(g).count() == 1;
}

EdgeSet bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> out;
  int timer = 0;

  // Iterative lowpoint DFS. The edge id used to enter a vertex is
  // skipped exactly once, so a parallel copy still acts as a back edge.
  struct Frame {
    int v;
    int entry_edge;
    bool entry_skipped;
    size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, false, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const IncidentEdge ie = inc[f.next++];
        if (ie.edge == f.entry_edge && !f.entry_skipped) {
          f.entry_skipped = true;
          continue;
        }
        if (ie.to == f.v) continue;  // loop
        if (disc[ie.to] == -1) {
          disc[ie.to] = low[ie.to] = timer++;
          stack.push_back({ie.to, ie.edge, false, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[ie.to]);
        }
      } else {
        int v = f.v;
        int entry = f.entry_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) out.push_back(entry);
        }
      }
    }
  }
  return EdgeSet(std::move(out));
}

bool cut_edges_on_path(const Multigraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("cut_edges_on_path: graph is disconnected");
  EdgeSet cut = bridges(g);
  if (cut.empty()) return true;

  // Contract the 2-edge-connected blocks; bridges are the tree edges.
  EdgeSet keep = edge_complement(g, cut);
  ComponentPartition blocks = components(g, &keep);
  std::vector<int> tree_degree(blocks.count(), 0);
  for (int id : cut) {
    const Edge& e = g.edge(id);
    ++tree_degree[blocks.component[e.u]];
    ++tree_degree[blocks.component[e.v]];
  }
  for (int d : tree_degree)
    if (d > 2) return false;
  return true;
}

std::optional<EdgeSet> perfect_matching(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return EdgeSet{};
  if (n % 2 != 0) return std::nullopt;
  if (n > 62)
    throw std::invalid_argument("perfect_matching: exact search capped at 62 vertices");

  std::unordered_set<std::uint64_t> dead;  // matched-vertex masks that fail
  std::vector<int> chosen;
  std::uint64_t matched = 0;

  auto search = [&](auto&& self) -> bool {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!(matched >> i & 1)) {
        v = i;
        break;
      }
    if (v == -1) return true;
    if (dead.count(matched)) return false;
    for (const IncidentEdge& ie : g.incident(v)) {
      if (ie.to == v) continue;  // loops never usable
      if (matched >> ie.to & 1) continue;
      matched |= (1ULL << v) | (1ULL << ie.to);
      chosen.push_back(ie.edge);
      if (self(self)) return true;
      chosen.pop_back();
      matched &= ~((1ULL << v) | (1ULL << ie.to));
    }
    dead.insert(matched);
    return false;
  };

  if (!search(search)) return std::nullopt;
  return EdgeSet(std::move(chosen));
}

std::vector<Cycle> two_factor_cycles(const Multigraph& g, const EdgeSet& m) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 3)
      throw std::invalid_argument("two_factor_cycles: graph is not 3-regular");
  std::vector<int> mdeg = degrees_in(g, m);
  for (int v = 0; v < n; ++v)
    if (mdeg[v] != 1)
      throw std::invalid_argument("two_factor_cycles: not a perfect matching");
  for (int id : m)
    if (g.is_loop(id))
      throw std::invalid_argument("two_factor_cycles: matching contains a loop");

  std::vector<char> in_matching(g.edge_count(), 0);
  for (int id : m) in_matching[id] = 1;
  std::vector<char> used(g.edge_count(), 0);
  std::vector<char> visited(n, 0);

  std::vector<Cycle> cycles;
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    Cycle c;
    int v = s;
    while (true) {
      visited[v] = 1;
      c.vertices.push_back(v);
      int next_edge = -1, next_vertex = -1;
      for (const IncidentEdge& ie : g.incident(v)) {
        if (in_matching[ie.edge] || used[ie.edge]) continue;
        next_edge = ie.edge;
        next_vertex = ie.to;
        break;
      }
      if (next_edge == -1) break;
      used[next_edge] = 1;
      c.edges.push_back(next_edge);
      if (next_vertex == s) break;
      v = next_vertex;
    }
    if (c.vertices.size() != c.edges.size())
      throw std::logic_error("two_factor_cycles: open walk in a 2-factor");
    cycles.push_back(std::move(c));
  }
  return cycles;
}

}  // namespace factorkit
