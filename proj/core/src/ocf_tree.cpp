#include "factorkit/ocf_tree.hpp"

#include <stdexcept>

#include "factorkit/caterpillar.hpp"
#include "factorkit/rooted_tree.hpp"

namespace factorkit {

namespace {

std::vector<int> subtree_orders(const Multigraph& g, const RootedTree& t) {
  std::vector<int> size(g.vertex_count(), 1);
  for (int v : t.postorder)
    if (v != t.root) size[t.parent[v]] += size[v];
  return size;
}

void require_tree(const Multigraph& g, const char* where) {
  if (!is_simple_tree(g))
    throw std::invalid_argument(std::string(where) + ": input is not a simple tree");
}

}  // namespace

OddnessProfile oddness_profile(const Multigraph& g) {
  require_tree(g, "oddness_profile");
  const int n = g.vertex_count();
  RootedTree t = RootedTree::build(g, 0);
  std::vector<int> size = subtree_orders(g, t);

  OddnessProfile profile;
  profile.oddness.assign(n, 0);
  profile.cls.assign(n, VertexClass::A);
  for (int v = 0; v < n; ++v) {
    int odd = 0;
    for (int c : t.children[v]) odd += size[c] % 2;
    if (v != t.root) odd += (n - size[v]) % 2;
    profile.oddness[v] = odd;
    profile.cls[v] = (odd == 1) ? VertexClass::A : VertexClass::B;
  }
  return profile;
}

bool star_condition_holds(const Multigraph& g) {
  require_tree(g, "star_condition_holds");
  if (g.vertex_count() % 2 != 0)
    throw std::invalid_argument("star_condition_holds: tree order must be even");

  const int n = g.vertex_count();
  RootedTree t = RootedTree::build(g, 0);
  std::vector<int> size = subtree_orders(g, t);
  OddnessProfile profile = oddness_profile(g);

  for (int v = 0; v < n; ++v) {
    int bad = 0;
    for (int c : t.children[v])
      if (profile.cls[c] == VertexClass::B && size[c] % 2 != 0) ++bad;
    if (v != t.root && profile.cls[t.parent[v]] == VertexClass::B &&
        (n - size[v]) % 2 != 0)
      ++bad;
    if (bad > 2) return false;
  }
  return true;
}

EdgeSet marked_edges(const Multigraph& g) {
  require_tree(g, "marked_edges");
  const int n = g.vertex_count();
  if (n <= 1) return EdgeSet{};
  RootedTree t = RootedTree::build(g, 0);
  std::vector<int> size = subtree_orders(g, t);

  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    if (size[v] % 2 != 0 && (n - size[v]) % 2 != 0)
      out.push_back(t.parent_edge[v]);
  }
  return EdgeSet(std::move(out));
}

std::optional<EdgeSet> ocf_tree_solve(const Multigraph& g) {
  require_tree(g, "ocf_tree_solve");
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  EdgeSet candidate = marked_edges(g);
  if (!verify_caterpillar_factor(g, candidate, CaterpillarKind::Odd).ok())
    return std::nullopt;
  return candidate;
}

}  // namespace factorkit
