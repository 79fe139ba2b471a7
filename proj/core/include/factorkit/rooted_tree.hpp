#ifndef FACTORKIT_ROOTED_TREE_HPP
#define FACTORKIT_ROOTED_TREE_HPP

#include <vector>

#include "factorkit/multigraph.hpp"

namespace factorkit {

// Parent/children view of a tree. Children are sorted by vertex id and
// the postorder is computed iteratively, so deep paths are fine.
struct RootedTree {
  int root = 0;
  std::vector<int> parent;       // -1 at the root
  std::vector<int> parent_edge;  // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> postorder;

  static RootedTree build(const Multigraph& g, int root);
};

// Simple tree: connected, n-1 edges, no loops or parallel edges.
bool is_simple_tree(const Multigraph& g);

}  // namespace factorkit

#endif
