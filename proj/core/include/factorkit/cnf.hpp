#ifndef FACTORKIT_CNF_HPP
#define FACTORKIT_CNF_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace factorkit {

struct Literal {
  int var;        // 0-based
  bool positive;
};

// 3-CNF: every clause has exactly three literals. Variables may repeat
// inside a clause; the gadget certificate translators reject that case.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

using Assignment = std::vector<bool>;

// DIMACS cnf: header "p cnf <vars> <clauses>", 'c' comment lines,
// 0-terminated clauses of width exactly 3.
CnfFormula parse_dimacs(std::string_view text);
std::string render_dimacs(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);

// True iff no clause repeats a literal (same variable with the same
// sign). Opposite signs of one variable may share a clause.
bool has_distinct_literal_clauses(const CnfFormula& f);

}  // namespace factorkit

#endif
