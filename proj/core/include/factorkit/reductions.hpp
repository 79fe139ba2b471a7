#ifndef FACTORKIT_REDUCTIONS_HPP
#define FACTORKIT_REDUCTIONS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "factorkit/cnf.hpp"
#include "factorkit/multigraph.hpp"

namespace factorkit {

// Bijection between the construction's vertex names (x1, y1', z1,2'',
// x1^0, c2, ...; copies carry a :1 / :2 suffix) and vertex ids.
struct GadgetMap {
  std::vector<std::string> name_of;
  std::unordered_map<std::string, int> id_of;

  int id(const std::string& name) const { return id_of.at(name); }
};

struct ReductionOutput {
  Multigraph graph;
  GadgetMap names;
};

// Even-caterpillar-factor reduction target: 16 vertices and 15 edges per
// variable plus one vertex and three edges per clause; always bipartite.
ReductionOutput build_gf_star(const CnfFormula& f);

// Odd-caterpillar-factor reduction target: two mirrored copies of the
// trimmed gadget with twin clause vertices, tied together at the literal
// vertices; 18k+4l vertices, 18k+12l edges; always bipartite.
ReductionOutput build_hf_star(const CnfFormula& f);

// Certificate builders for satisfying assignments. Clauses must not
// repeat a literal (the wiring needs three distinct literal vertices).
EdgeSet ecf_certificate_from_assignment(const CnfFormula& f,
                                        const Assignment& phi);
EdgeSet ocf_certificate_from_assignment(const CnfFormula& f,
                                        const Assignment& phi);

enum class ReductionKind { EcfGfStar, OcfHfStar };

// Reads a truth assignment back out of a verified factor of the
// corresponding reduction graph and checks that it satisfies f.
Assignment assignment_from_factor(const CnfFormula& f, ReductionKind kind,
                                  const EdgeSet& s);

// Sidecar format: one "name id" line per vertex, in id order.
std::string render_name_map(const GadgetMap& names);

}  // namespace factorkit

#endif
