#ifndef FACTORKIT_OCF_TREE_HPP
#define FACTORKIT_OCF_TREE_HPP

#include <optional>
#include <vector>

#include "factorkit/multigraph.hpp"

namespace factorkit {

enum class VertexClass { A, B };

// Per vertex: the number of odd-order components of T - v, and the A/B
// classification (A iff that number is 1). On even-order trees every
// oddness value is odd.
struct OddnessProfile {
  std::vector<int> oddness;
  std::vector<VertexClass> cls;
};

OddnessProfile oddness_profile(const Multigraph& g);

// Condition: at every vertex, at most two B-neighbors lie in odd
// components of the vertex-deleted tree. Only meaningful (and only
// accepted) for trees of even order.
bool star_condition_holds(const Multigraph& g);

// The edges whose removal splits the tree into two odd components.
// Computed from subtree orders rooted at vertex 0; the set is
// root-independent.
EdgeSet marked_edges(const Multigraph& g);

// Odd caterpillar factor on a simple tree: no on odd order, otherwise
// the marked edge set is the universal candidate and is returned iff it
// verifies. Runs in linear time.
std::optional<EdgeSet> ocf_tree_solve(const Multigraph& g);

}  // namespace factorkit

#endif
