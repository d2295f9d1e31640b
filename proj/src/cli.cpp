#include "uirg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "uirg/catalog.hpp"
#include "uirg/line_graph.hpp"
#include "uirg/ring_parser.hpp"
#include "uirg/upper_ideal_graph.hpp"
#include "uirg/verify.hpp"

namespace uirg {

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string element_list(const FiniteRing& r, const std::vector<Element>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += r.name(elems[i]);
  }
  return out + "}";
}

void print_ring(const ParsedRing& parsed, std::ostream& out) {
  const FiniteRing& r = parsed.ring;
  const auto us = units(r);
  out << "ring: " << r.display_name() << "\n";
  out << "order: " << r.order() << "\n";
  out << "characteristic: " << characteristic(r) << "\n";
  out << "field: " << yes_no(is_field(r)) << "\n";
  out << "local: " << yes_no(is_local(r)) << "\n";
  out << "units: " << us.size() << " " << element_list(r, us) << "\n";
  out << "ideals: " << all_ideals(r).size() << "\n";
  out << "factors:";
  for (const auto& f : parsed.factors) out << " " << f.display_name();
  out << "\n";
  if (const auto m = maximal_ideal(r)) {
    out << "maximal-ideal: " << element_list(r, m->members()) << "\n";
    out << "residue-field-order: " << r.order() / m->size() << "\n";
    out << "maximal-ideal-generators: " << minimal_generator_count(r).count << "\n";
    out << "principal: " << yes_no(is_principal_local(r)) << "\n";
  }
}

int cmd_verify(const std::string& theorem, int max_order, const std::string& report_path, std::ostream& out,
               std::ostream& err) {
  if (const char* cap = std::getenv("UIRG_MAX_ORDER")) {
    try {
      max_order = std::min(max_order, std::stoi(cap));
    } catch (const std::exception&) {
      err << "error: UIRG_MAX_ORDER is not an integer\n";
      return kExitInputError;
    }
  }
  const auto report = verify(theorem, build_catalog(max_order));
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) {
      err << "error: cannot write report to " << report_path << "\n";
      return kExitInputError;
    }
    file << report_to_json(report);
  }
  out << "theorem: " << theorem << "\n";
  out << "max-order: " << max_order << "\n";
  out << "entries: " << report.records.size() << "\n";
  out << "counterexamples: " << report.counterexamples << "\n";
  for (const auto& r : report.records)
    if (is_counterexample(r, theorem))
      out << "counterexample: " << r.display_name << " graph6=" << r.graph6 << " line=" << yes_no(r.line_graph_side)
          << "/" << yes_no(r.line_ring_side) << " coline=" << yes_no(r.coline_graph_side) << "/"
          << yes_no(r.coline_ring_side) << " rule=" << r.line_rule << "," << r.coline_rule << " digest=" << r.digest
          << "\n";
  return report.counterexamples > 0 ? kExitCounterexample : 0;
}

int cmd_figures(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& fig : figure_rings()) {
    const auto parsed = parse_ring_spec(fig.ring_spec);
    const auto g = upper_ideal_graph(parsed.ring).graph;
    const std::string file = "figure" + std::to_string(fig.number) + ".dot";
    std::ofstream(std::filesystem::path(dir) / file) << to_dot(g, "Gamma_U(" + fig.ring_spec + ")");
    out << file << " " << fig.ring_spec << " " << to_graph6(g) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper ideal relation graphs of finite commutative rings"};
  app.name("uirg");
  app.require_subcommand(1);

  std::string spec_text, format = "graph6", graph_text, theorem = "all", report_path, out_dir;
  bool want_line = false, want_coline = false, complement_set = false;
  int max_vertices = 6, max_order = 16;

  auto* ring_cmd = app.add_subcommand("ring", "Summarize a ring");
  ring_cmd->add_option("spec", spec_text, "Ring presentation, e.g. Z2xZ4")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Print the upper ideal relation graph");
  graph_cmd->add_option("spec", spec_text, "Ring presentation")->required();
  graph_cmd->add_option("--format", format, "dot, graph6 or json")->check(CLI::IsMember({"dot", "graph6", "json"}));

  auto* check_cmd = app.add_subcommand("check", "Decide line / complement-of-line membership");
  check_cmd->add_option("spec", spec_text, "Ring presentation")->required();
  check_cmd->add_flag("--line", want_line, "Line-graph test");
  check_cmd->add_flag("--coline", want_coline, "Complement-of-line-graph test");

  auto* root_cmd = app.add_subcommand("root", "Reconstruct a root graph H with L(H) = G");
  root_cmd->add_option("graph6", graph_text, "Graph in graph6 format")->required();

  auto* forbidden_cmd = app.add_subcommand("forbidden", "Derive the minimal non-line graphs");
  forbidden_cmd->add_option("--max-vertices", max_vertices, "Largest vertex count (<= 7)");
  forbidden_cmd->add_flag("--complement", complement_set, "Print complements");

  auto* verify_cmd = app.add_subcommand("verify", "Check the classification over the ring catalog");
  verify_cmd->add_option("--theorem", theorem, "2-nonlocal, 2-local, 3-nonlocal, 3-local or all");
  verify_cmd->add_option("--max-order", max_order, "Largest ring order (<= 32)");
  verify_cmd->add_option("--report", report_path, "JSON report path");

  auto* figures_cmd = app.add_subcommand("figures", "Write DOT files for the figure rings");
  figures_cmd->add_option("--out", out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*ring_cmd) {
      print_ring(parse_ring_spec(spec_text), out);
    } else if (*graph_cmd) {
      const auto parsed = parse_ring_spec(spec_text);
      const auto g = upper_ideal_graph(parsed.ring).graph;
      if (format == "dot")
        out << to_dot(g, "Gamma_U(" + parsed.ring.display_name() + ")");
      else if (format == "json")
        out << to_json(g) << "\n";
      else
        out << to_graph6(g) << "\n";
    } else if (*check_cmd) {
      const auto g = upper_ideal_graph(parse_ring_spec(spec_text).ring).graph;
      if (!want_line && !want_coline) want_line = want_coline = true;
      if (want_line) out << "line-graph: " << yes_no(is_line_graph(g)) << "\n";
      if (want_coline) out << "complement-of-line-graph: " << yes_no(is_complement_of_line_graph(g)) << "\n";
    } else if (*root_cmd) {
      const auto root = root_graph(from_graph6(graph_text));
      out << (root ? to_graph6(*root) : std::string("none")) << "\n";
    } else if (*forbidden_cmd) {
      for (const auto& g : minimal_forbidden_line(max_vertices).graphs)
        out << to_graph6(complement_set ? complement(g) : g) << "\n";
    } else if (*verify_cmd) {
      return cmd_verify(theorem, max_order, report_path, out, err);
    } else if (*figures_cmd) {
      return cmd_figures(out_dir, out);
    }
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.detail() << "\n";
    err << "  " << spec_text << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}

}  // namespace uirg
