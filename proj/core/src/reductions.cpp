#include "factorkit/reductions.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "factorkit/caterpillar.hpp"

namespace factorkit {

namespace {

struct GadgetBuilder {
  GadgetMap names;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> edge_id;

  int vertex(const std::string& name) {
    auto [it, fresh] =
        names.id_of.try_emplace(name, static_cast<int>(names.name_of.size()));
    if (fresh) names.name_of.push_back(name);
    return it->second;
  }

  void edge(const std::string& a, const std::string& b) {
    int u = vertex(a), v = vertex(b);
    int id = static_cast<int>(edges.size());
    edges.push_back({u, v});
    edge_id.try_emplace(std::minmax(u, v), id);
  }

  ReductionOutput finish() {
    int n = static_cast<int>(names.name_of.size());
    return {Multigraph(n, std::move(edges)), std::move(names)};
  }
};

std::string lit_vertex(const Literal& lit) {
  return "x" + std::to_string(lit.var + 1) + (lit.positive ? "^1" : "^0");
}

void check_bipartite(const Multigraph& g, const char* where) {
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const IncidentEdge& ie : g.incident(v)) {
        if (color[ie.to] == -1) {
          color[ie.to] = color[v] ^ 1;
          stack.push_back(ie.to);
        } else if (color[ie.to] == color[v]) {
          throw std::logic_error(std::string(where) + ": output is not bipartite");
        }
      }
    }
  }
}

// The 16-vertex variable gadget of the even-caterpillar reduction.
void add_gf_variable(GadgetBuilder& b, int i) {
  std::string I = std::to_string(i + 1);
  std::string x = "x" + I, y = "y" + I, yp = "y" + I + "'", ypp = "y" + I + "''";
  for (const std::string& name :
       {x, y, yp, ypp, "z" + I + ",1'", "z" + I + ",2'", "z" + I + ",3'",
        "z" + I + ",1''", "z" + I + ",2''", "z" + I + ",3''", x + "^0",
        x + "^1", "u" + I + "^0", "v" + I + "^0", "u" + I + "^1",
        "v" + I + "^1"})
    b.vertex(name);
  b.edge(x, y);
  b.edge(x, yp);
  b.edge(x, ypp);
  b.edge(yp, "z" + I + ",1'");
  b.edge(yp, "z" + I + ",2'");
  b.edge(yp, "z" + I + ",3'");
  b.edge(ypp, "z" + I + ",1''");
  b.edge(ypp, "z" + I + ",2''");
  b.edge(ypp, "z" + I + ",3''");
  b.edge(x, x + "^0");
  b.edge(x + "^0", "u" + I + "^0");
  b.edge("u" + I + "^0", "v" + I + "^0");
  b.edge(x, x + "^1");
  b.edge(x + "^1", "u" + I + "^1");
  b.edge("u" + I + "^1", "v" + I + "^1");
}

// The trimmed 9-vertex variable gadget of one copy in the odd reduction.
void add_hf_variable(GadgetBuilder& b, int i, const std::string& copy) {
  std::string I = std::to_string(i + 1);
  std::string x = "x" + I + copy;
  std::string yp = "y" + I + "'" + copy, ypp = "y" + I + "''" + copy;
  for (const std::string& name :
       {x, yp, ypp, "z" + I + ",1'" + copy, "z" + I + ",2'" + copy,
        "z" + I + ",1''" + copy, "z" + I + ",2''" + copy,
        "x" + I + "^0" + copy, "x" + I + "^1" + copy})
    b.vertex(name);
  b.edge(x, yp);
  b.edge(x, ypp);
  b.edge(yp, "z" + I + ",1'" + copy);
  b.edge(yp, "z" + I + ",2'" + copy);
  b.edge(ypp, "z" + I + ",1''" + copy);
  b.edge(ypp, "z" + I + ",2''" + copy);
  b.edge(x, "x" + I + "^0" + copy);
  b.edge(x, "x" + I + "^1" + copy);
}

GadgetBuilder make_gf_star(const CnfFormula& f) {
  GadgetBuilder b;
  for (int i = 0; i < f.variable_count; ++i) add_gf_variable(b, i);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::string c = "c" + std::to_string(j + 1);
    b.vertex(c);
    for (const Literal& lit : f.clauses[j]) b.edge(c, lit_vertex(lit));
  }
  return b;
}

GadgetBuilder make_hf_star(const CnfFormula& f) {
  GadgetBuilder b;
  for (const std::string& copy : {std::string(":1"), std::string(":2")}) {
    for (int i = 0; i < f.variable_count; ++i) add_hf_variable(b, i, copy);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
      std::string c = "c" + std::to_string(j + 1) + copy;
      std::string d = "d" + std::to_string(j + 1) + copy;
      b.vertex(c);
      b.vertex(d);
      for (const Literal& lit : f.clauses[j]) {
        b.edge(c, lit_vertex(lit) + copy);
        b.edge(d, lit_vertex(lit) + copy);
      }
    }
  }
  for (int i = 0; i < f.variable_count; ++i)
    for (const char* side : {"^0", "^1"}) {
      std::string base = "x" + std::to_string(i + 1) + side;
      b.edge(base + ":1", base + ":2");
    }
  return b;
}

void check_counts(const ReductionOutput& out, std::size_t vertices,
                  std::size_t edges, const char* where) {
  if (out.graph.vertex_count() != static_cast<int>(vertices) ||
      out.graph.edge_count() != static_cast<int>(edges))
    throw std::logic_error(std::string(where) + ": size formula violated");
}

// The lowest-index literal of clause j that phi satisfies.
int chosen_literal(const CnfFormula& f, const Assignment& phi, int j) {
  for (int s = 0; s < 3; ++s) {
    const Literal& lit = f.clauses[j][s];
    if (phi[lit.var] == lit.positive) return s;
  }
  return -1;
}

void check_certificate_inputs(const CnfFormula& f, const Assignment& phi,
                              const char* where) {
  if (static_cast<int>(phi.size()) != f.variable_count)
    throw std::invalid_argument(std::string(where) + ": assignment size mismatch");
  if (!satisfies(f, phi))
    throw std::invalid_argument(std::string(where) + ": assignment does not satisfy the formula");
  if (!has_distinct_literal_clauses(f))
    throw std::invalid_argument(std::string(where) + ": a clause repeats a literal");
}

}  // namespace

ReductionOutput build_gf_star(const CnfFormula& f) {
  ReductionOutput out = make_gf_star(f).finish();
  check_counts(out, 16 * f.variable_count + f.clauses.size(),
               15 * f.variable_count + 3 * f.clauses.size(), "build_gf_star");
  check_bipartite(out.graph, "build_gf_star");
  return out;
}

ReductionOutput build_hf_star(const CnfFormula& f) {
  ReductionOutput out = make_hf_star(f).finish();
  check_counts(out, 18 * f.variable_count + 4 * f.clauses.size(),
               18 * f.variable_count + 12 * f.clauses.size(), "build_hf_star");
  check_bipartite(out.graph, "build_hf_star");
  return out;
}

EdgeSet ecf_certificate_from_assignment(const CnfFormula& f,
                                        const Assignment& phi) {
  check_certificate_inputs(f, phi, "ecf_certificate_from_assignment");
  GadgetBuilder b = make_gf_star(f);
  ReductionOutput out = b.finish();
  auto take_edge = [&](const std::string& a, const std::string& c) {
    return b.edge_id.at(std::minmax(out.names.id(a), out.names.id(c)));
  };

  std::vector<int> marks_at(out.graph.vertex_count(), 0);
  std::vector<int> ids;

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Literal& lit = f.clauses[j][chosen_literal(f, phi, j)];
    std::string c = "c" + std::to_string(j + 1);
    ids.push_back(take_edge(c, lit_vertex(lit)));
    ++marks_at[out.names.id(lit_vertex(lit))];
  }

  for (int i = 0; i < f.variable_count; ++i) {
    std::string I = std::to_string(i + 1);
    std::string x = "x" + I;
    int inside = phi[i] ? 0 : 1;  // the literal vertex the component keeps

    ids.push_back(take_edge(x, "y" + I));
    ids.push_back(take_edge(x, "y" + I + "'"));
    ids.push_back(take_edge(x, "y" + I + "''"));
    for (int t = 1; t <= 3; ++t) {
      ids.push_back(take_edge("y" + I + "'", "z" + I + "," + std::to_string(t) + "'"));
      ids.push_back(take_edge("y" + I + "''", "z" + I + "," + std::to_string(t) + "''"));
    }
    ids.push_back(take_edge(x, x + "^" + std::to_string(inside)));

    for (int side = 0; side <= 1; ++side) {
      std::string S = std::to_string(side);
      ids.push_back(take_edge("u" + I + "^" + S, "v" + I + "^" + S));
      if (side == inside) continue;
      int marks = marks_at[out.names.id(x + "^" + S)];
      if (marks == 0 || marks % 2 != 0)
        ids.push_back(take_edge(x + "^" + S, "u" + I + "^" + S));
    }
  }

  EdgeSet certificate(std::move(ids));
  if (!verify_caterpillar_factor(out.graph, certificate, CaterpillarKind::Even).ok())
    throw std::logic_error("ecf_certificate_from_assignment: certificate failed verification");
  return certificate;
}

EdgeSet ocf_certificate_from_assignment(const CnfFormula& f,
                                        const Assignment& phi) {
  check_certificate_inputs(f, phi, "ocf_certificate_from_assignment");
  GadgetBuilder b = make_hf_star(f);
  ReductionOutput out = b.finish();
  auto take_edge = [&](const std::string& a, const std::string& c) {
    return b.edge_id.at(std::minmax(out.names.id(a), out.names.id(c)));
  };

  std::vector<char> side_marked(f.variable_count, 0);
  std::vector<int> ids;

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Literal& lit = f.clauses[j][chosen_literal(f, phi, j)];
    std::string J = std::to_string(j + 1);
    for (const std::string& copy : {std::string(":1"), std::string(":2")}) {
      ids.push_back(take_edge("c" + J + copy, lit_vertex(lit) + copy));
      ids.push_back(take_edge("d" + J + copy, lit_vertex(lit) + copy));
    }
    ids.push_back(take_edge(lit_vertex(lit) + ":1", lit_vertex(lit) + ":2"));
    side_marked[lit.var] = 1;
  }

  for (int i = 0; i < f.variable_count; ++i) {
    std::string I = std::to_string(i + 1);
    // A variable whose literal vertices carry no marks keeps x^0 in its
    // component and ties the two x^1 copies instead.
    int inside = side_marked[i] ? (phi[i] ? 0 : 1) : 0;
    if (!side_marked[i])
      ids.push_back(take_edge("x" + I + "^1:1", "x" + I + "^1:2"));
    for (const std::string& copy : {std::string(":1"), std::string(":2")}) {
      std::string x = "x" + I + copy;
      ids.push_back(take_edge(x, "y" + I + "'" + copy));
      ids.push_back(take_edge(x, "y" + I + "''" + copy));
      for (int t = 1; t <= 2; ++t) {
        std::string T = std::to_string(t);
        ids.push_back(take_edge("y" + I + "'" + copy, "z" + I + "," + T + "'" + copy));
        ids.push_back(take_edge("y" + I + "''" + copy, "z" + I + "," + T + "''" + copy));
      }
      ids.push_back(take_edge(x, "x" + I + "^" + std::to_string(inside) + copy));
    }
  }

  EdgeSet certificate(std::move(ids));
  if (!verify_caterpillar_factor(out.graph, certificate, CaterpillarKind::Odd).ok())
    throw std::logic_error("ocf_certificate_from_assignment: certificate failed verification");
  return certificate;
}

Assignment assignment_from_factor(const CnfFormula& f, ReductionKind kind,
                                  const EdgeSet& s) {
  if (!has_distinct_literal_clauses(f))
    throw std::invalid_argument("assignment_from_factor: a clause repeats a literal");
  ReductionOutput out =
      kind == ReductionKind::EcfGfStar ? build_gf_star(f) : build_hf_star(f);
  CaterpillarKind ck = kind == ReductionKind::EcfGfStar ? CaterpillarKind::Even
                                                        : CaterpillarKind::Odd;
  if (!verify_caterpillar_factor(out.graph, s, ck).ok())
    throw std::invalid_argument("assignment_from_factor: edge set is not a verified factor");

  ComponentPartition part = components(out.graph, &s);
  std::string suffix = kind == ReductionKind::EcfGfStar ? "" : ":1";
  Assignment phi(f.variable_count);
  for (int i = 0; i < f.variable_count; ++i) {
    std::string I = std::to_string(i + 1);
    int anchor = out.names.id("x" + I + suffix);
    int negative = out.names.id("x" + I + "^0" + suffix);
    phi[i] = part.component[anchor] == part.component[negative];
  }
  if (!satisfies(f, phi))
    throw std::logic_error("assignment_from_factor: recovered assignment fails the formula");
  return phi;
}

std::string render_name_map(const GadgetMap& names) {
  std::ostringstream outs;
  for (std::size_t id = 0; id < names.name_of.size(); ++id)
    outs << names.name_of[id] << ' ' << id << '\n';
  return outs.str();
}

}  // namespace factorkit
