#ifndef FACTORKIT_CATERPILLAR_HPP
#define FACTORKIT_CATERPILLAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "factorkit/multigraph.hpp"

namespace factorkit {

enum class CaterpillarKind { Even, Odd };

enum class CaterpillarClass { Even, Odd, Both, Neither };

// One caterpillar component of a factor: its vertices, the edge ids it
// uses, a spine (vertex sequence; a single vertex for stars and K2), and
// the leaves with their spine attachments.
struct CaterpillarComponent {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> spine;
  std::vector<std::pair<int, int>> leaves;  // (leaf, spine attachment)
};

struct CaterpillarDecomposition {
  std::vector<CaterpillarComponent> components;
};

enum class FactorReject {
  None,
  UncoveredVertex,
  NonCaterpillarComponent,
  ParityViolation,
};

struct CaterpillarCheck {
  std::optional<CaterpillarDecomposition> decomposition;
  FactorReject reason = FactorReject::None;
  int witness_vertex = -1;

  bool ok() const { return decomposition.has_value(); }
};

// Returns a spine if g is a caterpillar: a tree with at least one edge
// whose non-leaf vertices induce a path. For K2 the spine is the smaller
// vertex. Rejects non-simple input.
std::optional<std::vector<int>> is_caterpillar(const Multigraph& g);

// Both iff no vertex of degree >= 2 (that is, K2); Even/Odd iff every
// vertex of degree >= 2 has even/odd degree; Neither otherwise.
CaterpillarClass classify_caterpillar(const Multigraph& g);

// Accepts iff s covers every vertex and each component of (V, s) is a
// caterpillar of the requested kind; K2 counts as both kinds unless
// allow_k2 is false. For the odd kind every degree must be odd. On
// rejection the reason and an offending vertex are reported.
CaterpillarCheck verify_caterpillar_factor(const Multigraph& g,
                                           const EdgeSet& s,
                                           CaterpillarKind kind,
                                           bool allow_k2 = true);

}  // namespace factorkit

#endif
