#ifndef FACTORKIT_ECF_TREE_HPP
#define FACTORKIT_ECF_TREE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "factorkit/multigraph.hpp"

namespace factorkit {

// Role of a tree edge uv (u the parent) in an even caterpillar factor:
//   R      the edge is left out,
//   G      the edge is in and v is a leaf of u,
//   Gstar  the edge is in and u is a leaf of v,
//   B      the edge is in as an edge of a caterpillar's path.
enum class EdgeLabel : std::uint8_t {
  R = 1,
  B = 2,
  G = 4,
  Gstar = 8,
};

using LabelSet = std::uint8_t;

inline bool has_label(LabelSet s, EdgeLabel l) {
  return (s & static_cast<std::uint8_t>(l)) != 0;
}

// The per-vertex transfer rule: given the labels picked for the edges
// towards the children, the labels this combination yields for the edge
// towards the parent. May be empty.
LabelSet local_label_rule(std::span<const EdgeLabel> child_labels);

// Label sets of all tree edges, oriented child to parent, indexed by
// edge id; computed with the reduced constant-tuple evaluation. The root
// is the smallest-id vertex of degree 1. Mainly for inspection and
// testing; ecf_tree_solve is the decision front end.
std::vector<LabelSet> ecf_edge_labels(const Multigraph& g);

// Decides the even caterpillar factor problem on a simple tree and, on
// success, reconstructs a certificate that passes the even verifier.
// A single vertex has no factor. Runs in linear time.
std::optional<EdgeSet> ecf_tree_solve(const Multigraph& g);

}  // namespace factorkit

#endif
