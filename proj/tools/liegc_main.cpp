// ---- liegc command-line front end ----
//
// Subcommands: enumerate, aut, delta, cocycle-check, cohomology, cs-series,
// census, weight, lie-check, export-dot.  JSON (or DOT) goes to stdout or
// --out; exit 0 on success, 1 on validation failure, 2 on usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "liegc/complex.hpp"
#include "liegc/graph.hpp"
#include "liegc/json_io.hpp"
#include "liegc/lie.hpp"
#include "liegc/series.hpp"

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

void write_json(const json& j, const std::string& out_path) {
  write_output(j.dump(2) + "\n", out_path);
}

liegc::LieAlgebraData resolve_algebra(const std::string& spec) {
  if (spec == "sl2") return liegc::LieAlgebraData::sl2();
  if (spec == "so3") return liegc::LieAlgebraData::so3();
  if (spec == "sl2xsl2")
    return liegc::direct_sum(liegc::LieAlgebraData::sl2(), liegc::LieAlgebraData::sl2());
  return liegc::algebra_from_json(read_json_file(spec));
}

// ---- subcommand bodies ----

int cmd_enumerate(int order, bool connected, bool no_self_loops, const std::string& out) {
  json list = json::array();
  for (const auto& t : liegc::enumerate_trivalent(order, connected, !no_self_loops)) {
    list.push_back(json{{"graph", liegc::topology_to_json(t)},
                        {"aut", liegc::automorphism_count(t)},
                        {"connected", liegc::is_connected(t)},
                        {"has_self_loop", liegc::has_self_loop(t)}});
  }
  write_json(list, out);
  return 0;
}

int cmd_aut(const std::string& in, const std::string& out) {
  const auto g = liegc::graph_from_json(read_json_file(in));
  write_json(json{{"aut", liegc::automorphism_count(liegc::underlying(g))}}, out);
  return 0;
}

int cmd_delta(const std::string& in, bool sharp, const std::string& out) {
  const auto v = liegc::vector_from_json(read_json_file(in));
  const auto d = sharp ? liegc::delta_sharp(v) : liegc::delta(v);
  write_json(liegc::vector_to_json(d), out);
  return 0;
}

int cmd_cocycle_check(const std::string& in, bool sharp, const std::string& out) {
  const auto v = liegc::vector_from_json(read_json_file(in));
  const auto d = sharp ? liegc::delta_sharp(v) : liegc::delta(v);
  write_json(json{{"cocycle", d.is_zero()}}, out);
  return 0;
}

int cmd_cohomology(int order, const std::string& variant, const std::string& out) {
  liegc::Variant v;
  if (variant == "full")
    v = liegc::Variant::full;
  else if (variant == "quotient")
    v = liegc::Variant::quotient;
  else if (variant == "self-loop-only")
    v = liegc::Variant::self_loop_only;
  else
    throw CLI::ValidationError("--variant must be full, quotient or self-loop-only");
  const auto basis0 = liegc::basis(order, 0, v);
  const auto kernel = liegc::cocycle_basis(order, v);
  json cocycles = json::array();
  for (const auto& k : kernel) cocycles.push_back(liegc::vector_to_json(k));
  write_json(json{{"order", order},
                  {"variant", variant},
                  {"basis_dimension", basis0.size()},
                  {"kernel_dimension", kernel.size()},
                  {"cocycles", cocycles}},
             out);
  return 0;
}

int cmd_cs_series(int order, bool no_self_loops, const std::string& out) {
  const auto v = liegc::cs_cocycle(order, !no_self_loops);
  write_json(liegc::vector_to_json(v), out);
  return 0;
}

int cmd_census(int order, int workers, const std::string& out) {
  write_json(liegc::census_to_json(liegc::pairing_census(order, workers)), out);
  return 0;
}

int cmd_weight(const std::string& graph_path, const std::string& algebra,
               const std::string& xi_path, const std::string& out) {
  const auto g = resolve_algebra(algebra);
  const auto graph = liegc::graph_from_json(read_json_file(graph_path));
  const liegc::Tensor xi =
      xi_path.empty() ? liegc::casimir(g) : liegc::xi_from_json(read_json_file(xi_path));
  if (xi.dim != g.dim())
    throw std::invalid_argument("xi dimension does not match the algebra");
  const liegc::Rational w = liegc::graph_weight_decorated(g, graph, xi);
  write_json(json{{"weight", w.str()}}, out);
  return 0;
}

int cmd_lie_check(const std::string& algebra, const std::string& out) {
  const auto g = resolve_algebra(algebra);  // construction validates the axioms
  // AS: W_Y + W_Ybar = 0 at valency 3
  const liegc::Word y = liegc::make_pair(liegc::make_leaf(1), liegc::make_leaf(2));
  const liegc::Word ybar = liegc::make_pair(liegc::make_leaf(2), liegc::make_leaf(1));
  const auto wy = liegc::weight_of_tree(g, liegc::InsertionTree{y, +1}, 3);
  const auto wybar = liegc::weight_of_tree(g, liegc::InsertionTree{ybar, +1}, 3);
  bool as_holds = true;
  {
    liegc::Tensor sum = wy;
    for (const auto& [idx, val] : wybar.entries) sum.set(idx, sum.at(idx) + val);
    as_holds = sum.entries.empty();
  }
  const auto cas = liegc::casimir(g);
  const bool casimir_in_kernel = liegc::apply_bracket_map(g, cas).entries.empty();
  write_json(json{{"dim", g.dim()},
                  {"basis", g.basis_names()},
                  {"valid", true},
                  {"as", as_holds},
                  {"ihx", liegc::ihx_check(g)},
                  {"casimir_in_kernel", casimir_in_kernel},
                  {"bracket_kernel_dim", liegc::bracket_kernel_dim(g)},
                  {"lambda2_kernel_dim", liegc::lambda2_kernel_basis(g).size()}},
             out);
  return 0;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
  const auto g = liegc::graph_from_json(read_json_file(in));
  write_output(liegc::to_dot(g), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liegc: graph complexes with Lie-algebra decorations"};
  app.require_subcommand(1);

  int order = 1, workers = 0;
  bool connected = false, no_self_loops = false, sharp = false;
  std::string in_path, out_path, variant = "full", graph_path, algebra, xi_path;

  auto* enumerate = app.add_subcommand("enumerate", "List trivalent graph classes");
  enumerate->add_option("--order", order, "Graph order n (2n vertices)")->required();
  enumerate->add_flag("--connected", connected, "Connected graphs only");
  enumerate->add_flag("--no-self-loops", no_self_loops, "Exclude self-loops");
  enumerate->add_option("--out", out_path, "Output path (default stdout)");

  auto* aut = app.add_subcommand("aut", "Automorphism count of a graph");
  aut->add_option("--in", in_path, "Graph JSON")->required();
  aut->add_option("--out", out_path, "Output path");

  auto* delta_cmd = app.add_subcommand("delta", "Apply the differential to a vector");
  delta_cmd->add_option("--in", in_path, "Vector JSON")->required();
  delta_cmd->add_flag("--sharp", sharp, "Use the quotient differential");
  delta_cmd->add_option("--out", out_path, "Output path");

  auto* cocycle = app.add_subcommand("cocycle-check", "Test whether a vector is closed");
  cocycle->add_option("--in", in_path, "Vector JSON")->required();
  cocycle->add_flag("--sharp", sharp, "Use the quotient differential");
  cocycle->add_option("--out", out_path, "Output path");

  auto* cohomology = app.add_subcommand("cohomology", "Degree-0 cocycle space");
  cohomology->add_option("--order", order, "Graph order n")->required();
  cohomology->add_option("--variant", variant, "full|quotient|self-loop-only");
  cohomology->add_option("--out", out_path, "Output path");

  auto* cs = app.add_subcommand("cs-series", "Generating-series term of order n");
  cs->add_option("--order", order, "Graph order n")->required();
  cs->add_flag("--no-self-loops", no_self_loops, "Sum loopless graphs only");
  cs->add_option("--out", out_path, "Output path");

  auto* census = app.add_subcommand("census", "Perfect-matching census");
  census->add_option("--order", order, "Graph order n")->required();
  census->add_option("--workers", workers, "Worker threads (0 = hardware)");
  census->add_option("--out", out_path, "Output path");

  auto* weight = app.add_subcommand("weight", "Lie-algebra weight of a graph");
  weight->add_option("--graph", graph_path, "Graph JSON")->required();
  weight->add_option("--algebra", algebra, "ALG.json | sl2 | so3 | sl2xsl2")->required();
  weight->add_option("--xi", xi_path, "Self-loop tensor JSON (default: Casimir)");
  weight->add_option("--out", out_path, "Output path");

  auto* lie_check = app.add_subcommand("lie-check", "Validate a Lie algebra");
  lie_check->add_option("--algebra", algebra, "ALG.json | sl2 | so3 | sl2xsl2")->required();
  lie_check->add_option("--out", out_path, "Output path");

  auto* export_dot = app.add_subcommand("export-dot", "DOT export of a graph");
  export_dot->add_option("--in", in_path, "Graph JSON")->required();
  export_dot->add_option("--out", out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(order, connected, no_self_loops, out_path);
    if (aut->parsed()) return cmd_aut(in_path, out_path);
    if (delta_cmd->parsed()) return cmd_delta(in_path, sharp, out_path);
    if (cocycle->parsed()) return cmd_cocycle_check(in_path, sharp, out_path);
    if (cohomology->parsed()) return cmd_cohomology(order, variant, out_path);
    if (cs->parsed()) return cmd_cs_series(order, no_self_loops, out_path);
    if (census->parsed()) return cmd_census(order, workers, out_path);
    if (weight->parsed()) return cmd_weight(graph_path, algebra, xi_path, out_path);
    if (lie_check->parsed()) return cmd_lie_check(algebra, out_path);
    if (export_dot->parsed()) return cmd_export_dot(in_path, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // no subcommand matched (require_subcommand should prevent this)
}
