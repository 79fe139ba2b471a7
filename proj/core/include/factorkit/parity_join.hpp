#ifndef FACTORKIT_PARITY_JOIN_HPP
#define FACTORKIT_PARITY_JOIN_HPP

#include <vector>

#include "factorkit/multigraph.hpp"

namespace factorkit {

// The set X of vertices required to have odd degree; all other vertices
// must end up with even degree. |X| is always even.
class ParityTarget {
 public:
  ParityTarget(int n, std::vector<int> odd_vertices);

  int vertex_count() const { return n_; }
  const std::vector<int>& odd_vertices() const { return odd_; }
  bool is_odd(int v) const { return mask_[v] != 0; }

 private:
  int n_;
  std::vector<int> odd_;
  std::vector<char> mask_;
};

// True iff every vertex of g has the prescribed degree parity in s
// (degree 0 allowed).
bool matches_parity(const Multigraph& g, const EdgeSet& s,
                    const ParityTarget& t);

// Spanning subgraph H with deg_H(v) odd exactly on X, built by pairing X
// in DFS-discovery order, joining each pair by a BFS shortest path, and
// keeping the edges used by an odd number of paths. Vertices of degree 0
// are permitted. With restrict_to set, only those edges are usable and
// they must connect the graph.
EdgeSet parity_spanning_subgraph(const Multigraph& g, const ParityTarget& t,
                                 const EdgeSet* restrict_to = nullptr);

// Repeatedly finds a cycle with strictly more than half of its edges in
// h and flips the membership of all its edges; parity is preserved and
// |h| strictly decreases. All simple cycles are enumerated for
// n <= full_enumeration_bound; above it only 1-, 2- and 3-cycles are
// switched. Ties (exactly half inside) are never switched.
EdgeSet local_minimize(const Multigraph& g, const ParityTarget& t,
                       const EdgeSet& h, int full_enumeration_bound = 8);

}  // namespace factorkit

#endif
