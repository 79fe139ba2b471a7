#include <set>
#include <sstream>

#include "doctest.h"
#include "factorkit/caterpillar.hpp"
#include "factorkit/errors.hpp"
#include "factorkit/oracle.hpp"
#include "factorkit/reductions.hpp"
#include "test_util.hpp"

using namespace factorkit;
namespace tu = testutil;

namespace {

// C1 = X1 v -X2 v X3, the illustrated clause.
CnfFormula fig1_formula() {
  CnfFormula f;
  f.variable_count = 3;
  f.clauses.push_back({Literal{0, true}, Literal{1, false}, Literal{2, true}});
  return f;
}

CnfFormula repeated_literal_formula() {
  CnfFormula f;
  f.variable_count = 1;
  f.clauses.push_back({Literal{0, true}, Literal{0, true}, Literal{0, true}});
  return f;
}

bool is_bipartite(const Multigraph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const IncidentEdge& ie : g.incident(v)) {
        if (color[ie.to] == -1) {
          color[ie.to] = color[v] ^ 1;
          stack.push_back(ie.to);
        } else if (color[ie.to] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("parse_dimacs: named examples") {
  CnfFormula one = parse_dimacs("p cnf 1 1\n1 1 1 0\n");
  CHECK(one.variable_count == 1);
  REQUIRE(one.clauses.size() == 1);
  CHECK(!has_distinct_literal_clauses(one));

  CnfFormula fig = parse_dimacs("c comment\np cnf 3 1\n1 -2 3 0\n");
  REQUIRE(fig.clauses.size() == 1);
  CHECK(fig.clauses[0][0].var == 0);
  CHECK(fig.clauses[0][0].positive);
  CHECK(fig.clauses[0][1].var == 1);
  CHECK(!fig.clauses[0][1].positive);
  CHECK(fig.clauses[0][2].var == 2);

  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 4 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p wrong 1 1\n1 1 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 1 1 0\n"), ParseError);

  CnfFormula round = parse_dimacs(render_dimacs(fig1_formula()));
  CHECK(render_dimacs(round) == render_dimacs(fig1_formula()));
}

TEST_CASE("build_gf_star: counts, names and bipartiteness") {
  ReductionOutput fig = build_gf_star(fig1_formula());
  CHECK(fig.graph.vertex_count() == 49);
  CHECK(fig.graph.edge_count() == 48);
  CHECK(is_bipartite(fig.graph));

  ReductionOutput lone = build_gf_star([] {
    CnfFormula f;
    f.variable_count = 1;
    return f;
  }());
  CHECK(lone.graph.vertex_count() == 16);
  CHECK(lone.graph.edge_count() == 15);

  // The clause vertex is wired to the literal vertices.
  int c1 = fig.names.id("c1");
  std::vector<int> expect = {fig.names.id("x1^1"), fig.names.id("x2^0"),
                             fig.names.id("x3^1")};
  std::vector<int> got;
  for (const IncidentEdge& ie : fig.graph.incident(c1)) got.push_back(ie.to);
  CHECK(got == expect);
}

TEST_CASE("build_hf_star: counts, mirroring and bipartiteness") {
  ReductionOutput small = build_hf_star(repeated_literal_formula());
  CHECK(small.graph.vertex_count() == 22);   // 18k + 4l
  CHECK(small.graph.edge_count() == 30);     // 18k + 12l
  CHECK(is_bipartite(small.graph));

  CnfFormula f23 = generate_cnf(3, 3, 11);
  ReductionOutput bigger = build_hf_star(f23);
  CHECK(bigger.graph.vertex_count() == 18 * 3 + 4 * 3);
  CHECK(bigger.graph.edge_count() == 18 * 3 + 12 * 3);
  CHECK(is_bipartite(bigger.graph));

  // Mirror symmetry: every copy-1 edge has a copy-2 twin.
  ReductionOutput h = build_hf_star(fig1_formula());
  auto mirror_name = [](std::string name) {
    auto pos = name.rfind(":1");
    if (pos != std::string::npos && pos == name.size() - 2)
      name.replace(pos, 2, ":2");
    return name;
  };
  int mirrored = 0;
  std::set<std::pair<int, int>> edge_keys;
  for (const Edge& e : h.graph.edges())
    edge_keys.insert(std::minmax(e.u, e.v));
  for (const Edge& e : h.graph.edges()) {
    std::string a = h.names.name_of[e.u], b = h.names.name_of[e.v];
    if (a.ends_with(":1") && b.ends_with(":1")) {
      int u2 = h.names.id(mirror_name(a));
      int v2 = h.names.id(mirror_name(b));
      CHECK(edge_keys.count(std::minmax(u2, v2)) == 1);
      ++mirrored;
    }
  }
  CHECK(mirrored == (h.graph.edge_count() - 2 * 3) / 2);
}

TEST_CASE("random formulas keep the size formulas exactly") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int k = 3 + static_cast<int>(seed % 5);
    int l = 1 + static_cast<int>(seed % 9);
    CnfFormula f = generate_cnf(k, l, 8000 + seed);
    ReductionOutput gf = build_gf_star(f);
    CHECK(gf.graph.vertex_count() == 16 * k + l);
    CHECK(gf.graph.edge_count() == 15 * k + 3 * l);
    CHECK(is_bipartite(gf.graph));
    ReductionOutput hf = build_hf_star(f);
    CHECK(hf.graph.vertex_count() == 18 * k + 4 * l);
    CHECK(hf.graph.edge_count() == 18 * k + 12 * l);
    CHECK(is_bipartite(hf.graph));
  }
}

TEST_CASE("ecf certificates from satisfying assignments") {
  CnfFormula fig = fig1_formula();
  Assignment all_true(3, true);
  REQUIRE(satisfies(fig, all_true));
  EdgeSet cert = ecf_certificate_from_assignment(fig, all_true);
  ReductionOutput out = build_gf_star(fig);
  CHECK(verify_caterpillar_factor(out.graph, cert, CaterpillarKind::Even).ok());

  // Clause-free formula: the variable side pieces fall out exactly.
  CnfFormula lone;
  lone.variable_count = 1;
  EdgeSet small = ecf_certificate_from_assignment(lone, {true});
  ReductionOutput g = build_gf_star(lone);
  auto check = verify_caterpillar_factor(g.graph, small, CaterpillarKind::Even);
  REQUIRE(check.ok());
  ComponentPartition part = components(g.graph, &small);
  CHECK(part.component[g.names.id("x1")] == part.component[g.names.id("x1^0")]);
  CHECK(part.component[g.names.id("u1^0")] == part.component[g.names.id("v1^0")]);
  CHECK(part.component[g.names.id("x1^1")] ==
        part.component[g.names.id("u1^1")]);
  CHECK(part.component[g.names.id("x1^1")] ==
        part.component[g.names.id("v1^1")]);
  CHECK(part.component[g.names.id("x1")] != part.component[g.names.id("x1^1")]);

  CHECK_THROWS_AS(
      ecf_certificate_from_assignment(repeated_literal_formula(), {true}),
      std::invalid_argument);
  CHECK_THROWS_AS(ecf_certificate_from_assignment(
                      fig1_formula(), Assignment({false, true, false})),
                  std::invalid_argument);
}

TEST_CASE("ocf certificates from satisfying assignments") {
  CnfFormula fig = fig1_formula();
  Assignment phi(3, true);
  EdgeSet cert = ocf_certificate_from_assignment(fig, phi);
  ReductionOutput out = build_hf_star(fig);
  CHECK(verify_caterpillar_factor(out.graph, cert, CaterpillarKind::Odd).ok());

  // A variable without marks bridges its two x^1 copies and keeps x^0 in
  // the component: X2 only appears negated and phi(X2) = true, so no
  // clause marks it.
  ComponentPartition part = components(out.graph, &cert);
  CHECK(part.component[out.names.id("x2^1:1")] ==
        part.component[out.names.id("x2^1:2")]);
  CHECK(part.component[out.names.id("x2:1")] ==
        part.component[out.names.id("x2^0:1")]);

  CHECK_THROWS_AS(
      ocf_certificate_from_assignment(fig, Assignment({false, true, false})),
      std::invalid_argument);
}

TEST_CASE("assignments can be read back from factors") {
  // Round trip through the builders.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    CnfFormula f = generate_cnf(4, 5, 9000 + seed);
    auto model = dpll_sat(f);
    if (!model) continue;
    EdgeSet ecf = ecf_certificate_from_assignment(f, *model);
    Assignment back = assignment_from_factor(f, ReductionKind::EcfGfStar, ecf);
    CHECK(satisfies(f, back));
    EdgeSet ocf = ocf_certificate_from_assignment(f, *model);
    Assignment back2 = assignment_from_factor(f, ReductionKind::OcfHfStar, ocf);
    CHECK(satisfies(f, back2));
  }

  // Oracle-found factor on a small instance decodes to a model. The
  // smallest simple target with a clause needs two variables and a
  // distinct-literal clause.
  CnfFormula tiny;
  tiny.variable_count = 2;
  tiny.clauses.push_back({Literal{0, true}, Literal{0, false}, Literal{1, true}});
  ReductionOutput gf = build_gf_star(tiny);
  auto found = brute_caterpillar_factor(gf.graph, CaterpillarKind::Even, true);
  REQUIRE(found.has_value());
  Assignment decoded = assignment_from_factor(tiny, ReductionKind::EcfGfStar, *found);
  CHECK(satisfies(tiny, decoded));

  CHECK_THROWS_AS(
      assignment_from_factor(tiny, ReductionKind::EcfGfStar, EdgeSet({0})),
      std::invalid_argument);
}

TEST_CASE("render_name_map is stable and bijective") {
  ReductionOutput out = build_gf_star(fig1_formula());
  std::string text = render_name_map(out.names);
  std::istringstream in(text);
  std::string name;
  int id, lines = 0;
  while (in >> name >> id) {
    CHECK(out.names.id(name) == id);
    ++lines;
  }
  CHECK(lines == out.graph.vertex_count());
}
