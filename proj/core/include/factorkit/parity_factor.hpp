#ifndef FACTORKIT_PARITY_FACTOR_HPP
#define FACTORKIT_PARITY_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "factorkit/multigraph.hpp"
#include "factorkit/parity_join.hpp"

namespace factorkit {

// Degree parities as a 0/1 sequence indexed by vertex.
using BinarySequence = std::vector<std::uint8_t>;

BinarySequence binary_degree_sequence(const Multigraph& g);

// The one check every constructor and oracle answer goes through:
// deg_s(v) >= 1 for all v, and deg_s(v) odd exactly on X.
bool verify_parity_factor(const Multigraph& g, const EdgeSet& s,
                          const ParityTarget& t);

// Factor of g whose binary degree sequence is exactly b, obtained by
// carving a parity subgraph K out of a connected factor h that has
// 1 <= deg_h(v) < deg_g(v) everywhere and returning E(g) \ K.
EdgeSet b_factor_via_slack(const Multigraph& g, const EdgeSet& h,
                           const BinarySequence& b);

// A connected spanning edge set with deg(v) strictly below deg_g(v) at
// every vertex, or nothing. Tries a Hamiltonian path (n <= 12), then
// spanning-tree local search, then exhaustive degree-constrained
// spanning-tree search (n <= 10, which makes an absent answer for small
// inputs definitive).
std::optional<EdgeSet> find_slack_connected_factor(const Multigraph& g);

// Precondition of the triangle constructor: every vertex lies on a
// loopless 2-cycle (parallel pair) or a 3-cycle.
bool every_vertex_on_short_cycle(const Multigraph& g);

// X-parity-factor for graphs in which every vertex lies on a loopless
// 2-cycle or a 3-cycle: the complement of a parity subgraph that is
// shrunk by loop, parallel-pair and triangle switches until no vertex is
// saturated.
EdgeSet x_parity_factor_triangle(const Multigraph& g, const ParityTarget& t);

// X-parity-factor for connected 3-regular graphs whose cut-edges lie on
// one path: remove a family of disjoint paths with endpoints exactly
// V \ X from the graph.
EdgeSet x_parity_factor_cubic(const Multigraph& g, const ParityTarget& t);

// A path inside the two-factor frame; edges[i] joins vertices[i] and
// vertices[i+1].
struct VertexPath {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// The disjoint path selection at the heart of the cubic construction.
// cycles must partition the vertices, connectors must tie them into one
// tree (one cycle needs no connector), and |z| must be even. Returns
// |z|/2 vertex-disjoint paths whose endpoint set is exactly z and whose
// internal vertices avoid z.
std::vector<VertexPath> select_disjoint_paths(const Multigraph& g,
                                              const std::vector<Cycle>& cycles,
                                              const std::vector<int>& connectors,
                                              const std::vector<int>& z);

// Sweeps every even-size X through the brute-force factor search.
// Guarded; override max_n deliberately for bigger inputs.
bool has_strong_parity_property(const Multigraph& g, int max_n = 14);

enum class ObstructionKind {
  DegreeOneVertex,   // a vertex of degree 1
  DegreeTwoPath,     // v1v2v3 with all degrees 2, |V| > 3
  CutEdgeBranch,     // degree pattern 2,3,2 with a cut-edge into a
                     // component of order >= 4
};

struct Obstruction {
  ObstructionKind kind;
  std::vector<int> witness;
};

// Local patterns that rule out the strong parity property.
std::vector<Obstruction> detect_obstructions(const Multigraph& g);

}  // namespace factorkit

#endif
