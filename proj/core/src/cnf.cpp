#include "factorkit/cnf.hpp"

#include <sstream>

#include "factorkit/errors.hpp"

namespace factorkit {

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  CnfFormula f;
  bool have_header = false;
  long long want_clauses = 0;
  std::vector<long long> pending;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (!(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 ||
          clauses < 0)
        throw ParseError("bad header, expected 'p cnf <vars> <clauses>'",
                         line_no);
      if (ls >> tok) throw ParseError("trailing header content", line_no);
      have_header = true;
      f.variable_count = static_cast<int>(vars);
      want_clauses = clauses;
      continue;
    }
    if (!have_header) throw ParseError("clause before header", line_no);
    ls.clear();
    ls.str(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("clause width " + std::to_string(pending.size()) +
                               ", expected 3",
                           line_no);
        std::array<Literal, 3> clause;
        for (int i = 0; i < 3; ++i) {
          long long v = pending[i] > 0 ? pending[i] : -pending[i];
          if (v < 1 || v > f.variable_count)
            throw ParseError("variable out of range", line_no);
          clause[i] = {static_cast<int>(v - 1), pending[i] > 0};
        }
        f.clauses.push_back(clause);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (ls.fail() && !ls.eof())
      throw ParseError("expected an integer literal", line_no);
  }
  if (!have_header) throw ParseError("missing header", line_no);
  if (!pending.empty()) throw ParseError("unterminated clause", line_no);
  if (static_cast<long long>(f.clauses.size()) != want_clauses)
    throw ParseError("header announced " + std::to_string(want_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()),
                     line_no);
  return f;
}

std::string render_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const Literal& lit : clause)
      out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool ok = false;
    for (const Literal& lit : clause)
      if (a[lit.var] == lit.positive) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool has_distinct_literal_clauses(const CnfFormula& f) {
  auto same = [](const Literal& a, const Literal& b) {
    return a.var == b.var && a.positive == b.positive;
  };
  for (const auto& clause : f.clauses) {
    if (same(clause[0], clause[1]) || same(clause[0], clause[2]) ||
        same(clause[1], clause[2]))
      return false;
  }
  return true;
}

}  // namespace factorkit
