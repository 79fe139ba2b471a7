#ifndef FACTORKIT_ORACLE_HPP
#define FACTORKIT_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "factorkit/caterpillar.hpp"
#include "factorkit/cnf.hpp"
#include "factorkit/multigraph.hpp"
#include "factorkit/parity_join.hpp"

namespace factorkit {

// Exact reference solvers. All of them backtrack over edges in id order,
// include before exclude, so the certificate found first in that
// canonical order is returned. Prunings: a vertex that can no longer
// reach its minimum degree, and (for parity-constrained searches) a
// parity deficit with no undecided non-loop edge left.

// Edge subset with degree >= 1 everywhere and degrees odd exactly on X.
std::optional<EdgeSet> brute_x_parity_factor(const Multigraph& g,
                                             const ParityTarget& t,
                                             int max_edges = 30);

// Edge subset accepted by verify_caterpillar_factor for the given kind.
// With propagation, implied decisions are applied eagerly and the
// default guard rises from 30 to 40 edges; max_edges >= 0 overrides the
// guard explicitly.
std::optional<EdgeSet> brute_caterpillar_factor(const Multigraph& g,
                                                CaterpillarKind kind,
                                                bool propagation = true,
                                                int max_edges = -1);

// Reference SAT solver: unit propagation plus branching on the
// lowest-index unassigned variable, true first.
std::optional<Assignment> dpll_sat(const CnfFormula& f);

// Deterministic instance generators: identical parameters and seed give
// identical output.
Multigraph generate_tree(int n, std::uint64_t seed);

// Connected simple cubic graph: a random 2-factor (cycle lengths >= 3)
// overlaid with a random perfect matching, redrawn until the result is
// simple and connected. Requires even n >= 4.
Multigraph generate_cubic(int n, std::uint64_t seed);

// Clauses over three distinct variables with random signs; requires
// variables >= 3.
CnfFormula generate_cnf(int variables, int clauses, std::uint64_t seed);

// Endpoints drawn uniformly, loops and parallel edges included; with
// require_connected the draw is repeated until connected.
Multigraph generate_multigraph(int n, int m, std::uint64_t seed,
                               bool require_connected = true);

}  // namespace factorkit

#endif
