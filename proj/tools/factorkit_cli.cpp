// Command-line front end: graph factor solvers, verifiers, the SAT
// reductions and the instance generators, with stable exit codes
// (0 = YES, 1 = NO, 2 = error).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "factorkit/caterpillar.hpp"
#include "factorkit/ecf_tree.hpp"
#include "factorkit/multigraph.hpp"
#include "factorkit/ocf_tree.hpp"
#include "factorkit/oracle.hpp"
#include "factorkit/parity_factor.hpp"
#include "factorkit/parity_join.hpp"
#include "factorkit/reductions.hpp"
#include "factorkit/rooted_tree.hpp"

namespace {

using namespace factorkit;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    size_t pos = 0;
    out.push_back(std::stoi(token, &pos));
    if (pos != token.size())
      throw std::runtime_error("bad id list entry '" + token + "'");
  }
  return out;
}

int print_certificate(const std::optional<EdgeSet>& s) {
  if (!s) {
    std::cout << "NO\n";
    return 1;
  }
  std::cout << "YES\n";
  bool first = true;
  for (int id : *s) {
    if (!first) std::cout << ' ';
    std::cout << id;
    first = false;
  }
  std::cout << '\n';
  return 0;
}

int print_decision(bool yes) {
  std::cout << (yes ? "YES" : "NO") << '\n';
  return yes ? 0 : 1;
}

bool cubic_applicable(const Multigraph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return cut_edges_on_path(g) && perfect_matching(g).has_value();
}

bool triangle_applicable(const Multigraph& g) {
  return is_connected(g) && every_vertex_on_short_cycle(g);
}

int run_parity_factor(const Multigraph& g, const ParityTarget& t,
                      const std::string& method) {
  if (method == "brute")
    return print_certificate(brute_x_parity_factor(g, t));
  if (method == "triangle")
    return print_certificate(x_parity_factor_triangle(g, t));
  if (method == "cubic")
    return print_certificate(x_parity_factor_cubic(g, t));
  if (method == "slack") {
    auto h = find_slack_connected_factor(g);
    if (!h)
      throw std::runtime_error("slack method found no connected factor with degree slack");
    BinarySequence b(g.vertex_count(), 0);
    for (int v : t.odd_vertices()) b[v] = 1;
    return print_certificate(b_factor_via_slack(g, *h, b));
  }

  // auto: most specific constructive route first, oracle as last resort.
  if (cubic_applicable(g)) return print_certificate(x_parity_factor_cubic(g, t));
  if (triangle_applicable(g))
    return print_certificate(x_parity_factor_triangle(g, t));
  if (auto h = find_slack_connected_factor(g)) {
    BinarySequence b(g.vertex_count(), 0);
    for (int v : t.odd_vertices()) b[v] = 1;
    return print_certificate(b_factor_via_slack(g, *h, b));
  }
  if (g.edge_count() <= 30) return print_certificate(brute_x_parity_factor(g, t));
  throw std::runtime_error("no method applies: constructive preconditions fail and the instance exceeds the brute-force guard");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraph parity-factor and caterpillar-factor toolkit"};
  app.require_subcommand(1);

  std::string graph_path, cnf_path, odd_list, edge_list, names_out;
  std::string method = "auto", target, kind;
  bool minimize = false, force_tree = false, force_brute = false;
  bool allow_disconnected = false;
  int max_n = 14, gen_n = 0, gen_m = 0, gen_vars = 0, gen_clauses = 0;
  std::uint64_t seed = 0;

  CLI::App* parity_join_cmd =
      app.add_subcommand("parity-join", "spanning subgraph with prescribed degree parities");
  parity_join_cmd->add_option("graph", graph_path)->required();
  parity_join_cmd->add_option("--odd", odd_list, "comma-separated vertices required odd");
  parity_join_cmd->add_flag("--minimize", minimize, "apply cycle-switch minimization");

  CLI::App* parity_factor_cmd =
      app.add_subcommand("parity-factor", "X-parity-factor (all degrees positive)");
  parity_factor_cmd->add_option("graph", graph_path)->required();
  parity_factor_cmd->add_option("--odd", odd_list);
  parity_factor_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "brute", "slack", "triangle", "cubic"}));

  CLI::App* spp_cmd = app.add_subcommand("spp-check", "strong parity property sweep");
  spp_cmd->add_option("graph", graph_path)->required();
  spp_cmd->add_option("--max-n", max_n, "sweep guard");

  CLI::App* ecf_cmd = app.add_subcommand("ecf", "even caterpillar factor");
  ecf_cmd->add_option("graph", graph_path)->required();
  ecf_cmd->add_flag("--tree", force_tree, "require the linear-time tree solver");
  ecf_cmd->add_flag("--brute", force_brute, "force the exact search");

  CLI::App* ocf_cmd = app.add_subcommand("ocf", "odd caterpillar factor");
  ocf_cmd->add_option("graph", graph_path)->required();
  ocf_cmd->add_flag("--tree", force_tree);
  ocf_cmd->add_flag("--brute", force_brute);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "compile 3-CNF into a factor instance");
  reduce_cmd->add_option("cnf", cnf_path)->required();
  reduce_cmd->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"ecf", "ocf"}));
  reduce_cmd->add_option("--names", names_out, "write the vertex name map here");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("--edges", edge_list)->required();
  verify_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"xparity", "even", "odd"}));
  verify_cmd->add_option("--odd", odd_list);

  CLI::App* gen_cmd = app.add_subcommand("gen", "deterministic instance generator");
  gen_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"tree", "cubic", "cnf", "multigraph"}));
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--m", gen_m);
  gen_cmd->add_option("--vars", gen_vars);
  gen_cmd->add_option("--clauses", gen_clauses);
  gen_cmd->add_flag("--allow-disconnected", allow_disconnected);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parity_join_cmd->parsed()) {
      Multigraph g = parse_graph(slurp(graph_path));
      ParityTarget t(g.vertex_count(), parse_id_list(odd_list));
      EdgeSet h = parity_spanning_subgraph(g, t);
      if (minimize) h = local_minimize(g, t, h);
      return print_certificate(h);
    }
    if (parity_factor_cmd->parsed()) {
      Multigraph g = parse_graph(slurp(graph_path));
      ParityTarget t(g.vertex_count(), parse_id_list(odd_list));
      return run_parity_factor(g, t, method);
    }
    if (spp_cmd->parsed()) {
      Multigraph g = parse_graph(slurp(graph_path));
      return print_decision(has_strong_parity_property(g, max_n));
    }
    if (ecf_cmd->parsed() || ocf_cmd->parsed()) {
      bool even = ecf_cmd->parsed();
      Multigraph g = parse_graph(slurp(graph_path));
      if (force_tree && force_brute)
        throw std::runtime_error("--tree and --brute exclude each other");
      bool tree_route = force_tree || (!force_brute && is_simple_tree(g));
      if (force_tree && !is_simple_tree(g))
        throw std::runtime_error("--tree requires a simple tree");
      std::optional<EdgeSet> cert;
      if (tree_route)
        cert = even ? ecf_tree_solve(g) : ocf_tree_solve(g);
      else
        cert = brute_caterpillar_factor(
            g, even ? CaterpillarKind::Even : CaterpillarKind::Odd);
      return print_certificate(cert);
    }
    if (reduce_cmd->parsed()) {
      CnfFormula f = parse_dimacs(slurp(cnf_path));
      ReductionOutput out =
          target == "ecf" ? build_gf_star(f) : build_hf_star(f);
      std::cout << render_graph(out.graph);
      if (!names_out.empty()) {
        std::ofstream ns(names_out);
        if (!ns) throw std::runtime_error("cannot write " + names_out);
        ns << render_name_map(out.names);
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      Multigraph g = parse_graph(slurp(graph_path));
      EdgeSet s(parse_id_list(edge_list));
      for (int id : s)
        if (id < 0 || id >= g.edge_count())
          throw std::runtime_error("edge id out of range");
      if (kind == "xparity") {
        ParityTarget t(g.vertex_count(), parse_id_list(odd_list));
        return print_decision(verify_parity_factor(g, s, t));
      }
      CaterpillarKind ck =
          kind == "even" ? CaterpillarKind::Even : CaterpillarKind::Odd;
      return print_decision(verify_caterpillar_factor(g, s, ck).ok());
    }
    if (gen_cmd->parsed()) {
      if (kind == "tree") std::cout << render_graph(generate_tree(gen_n, seed));
      else if (kind == "cubic")
        std::cout << render_graph(generate_cubic(gen_n, seed));
      else if (kind == "multigraph")
        std::cout << render_graph(
            generate_multigraph(gen_n, gen_m, seed, !allow_disconnected));
      else
        std::cout << render_dimacs(generate_cnf(gen_vars, gen_clauses, seed));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
