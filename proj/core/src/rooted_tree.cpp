#include "factorkit/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorkit {

RootedTree RootedTree::build(const Multigraph& g, int root) {
  const int n = g.vertex_count();
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.children.resize(n);
  t.postorder.reserve(n);

  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  std::vector<int> preorder;
  preorder.reserve(n);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    for (const IncidentEdge& ie : g.incident(v)) {
      if (seen[ie.to]) continue;
      seen[ie.to] = 1;
      t.parent[ie.to] = v;
      t.parent_edge[ie.to] = ie.edge;
      t.children[v].push_back(ie.to);
      stack.push_back(ie.to);
    }
  }
  if (static_cast<int>(preorder.size()) != n)
    throw std::invalid_argument("RootedTree: graph is disconnected");
  for (auto& c : t.children) std::sort(c.begin(), c.end());

  // Reversed preorder puts every child before its parent.
  t.postorder.assign(preorder.rbegin(), preorder.rend());
  return t;
}

bool is_simple_tree(const Multigraph& g) {
  return g.vertex_count() >= 1 &&
         g.edge_count() == g.vertex_count() - 1 && g.is_simple() &&
         is_connected(g);
}

}  // namespace factorkit
