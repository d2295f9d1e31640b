#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "uirg/catalog.hpp"
#include "uirg/line_graph.hpp"
#include "uirg/ring_parser.hpp"
#include "uirg/upper_ideal_graph.hpp"
#include "uirg/verify.hpp"

namespace py = pybind11;
using namespace uirg;

namespace {

std::vector<std::string> element_names(const FiniteRing& r, const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (Element e : elems) out.push_back(r.name(e));
  return out;
}

py::dict ring_summary(const std::string& spec) {
  const auto parsed = parse_ring_spec(spec);
  const auto& r = parsed.ring;
  py::dict d;
  d["name"] = r.display_name();
  d["order"] = r.order();
  d["characteristic"] = characteristic(r);
  d["field"] = is_field(r);
  d["local"] = is_local(r);
  d["units"] = element_names(r, units(r));
  d["ideals"] = all_ideals(r).size();
  std::vector<std::string> factors;
  for (const auto& f : parsed.factors) factors.push_back(f.display_name());
  d["factors"] = factors;
  if (const auto m = maximal_ideal(r)) {
    d["maximal_ideal"] = element_names(r, m->members());
    d["maximal_ideal_generators"] = minimal_generator_count(r).count;
    d["principal"] = is_principal_local(r);
  }
  return d;
}

SimpleGraph graph_of(const std::string& spec) { return upper_ideal_graph(parse_ring_spec(spec).ring).graph; }

py::dict classify_spec(const std::string& spec) {
  const auto parsed = parse_ring_spec(spec);
  const auto v = classify(parsed.ring, parsed.factors);
  py::dict d;
  d["line"] = v.line.holds;
  d["line_rule"] = std::string(rule_id(v.line.rule));
  d["coline"] = v.coline.holds;
  d["coline_rule"] = std::string(rule_id(v.coline.rule));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Upper ideal relation graphs of finite commutative rings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RingError>(m, "RingError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  m.def("ring_summary", &ring_summary, py::arg("spec"), "Order, characteristic, units, ideals and factors of a ring.");
  m.def(
      "graph6", [](const std::string& spec) { return to_graph6(graph_of(spec)); }, py::arg("spec"),
      "Upper ideal relation graph of the ring, as graph6.");
  m.def(
      "dot", [](const std::string& spec) { return to_dot(graph_of(spec), "Gamma_U(" + spec + ")"); },
      py::arg("spec"));
  m.def(
      "graph_json", [](const std::string& spec) { return to_json(graph_of(spec)); }, py::arg("spec"));
  m.def(
      "is_line_graph", [](const std::string& g6) { return is_line_graph(from_graph6(g6)); }, py::arg("graph6"));
  m.def(
      "is_complement_of_line_graph", [](const std::string& g6) { return is_complement_of_line_graph(from_graph6(g6)); },
      py::arg("graph6"));
  m.def(
      "root_graph",
      [](const std::string& g6) -> std::optional<std::string> {
        const auto h = root_graph(from_graph6(g6));
        if (!h) return std::nullopt;
        return to_graph6(*h);
      },
      py::arg("graph6"), "graph6 of H with L(H) isomorphic to the input, or None.");
  m.def(
      "forbidden_line",
      [](int max_vertices) {
        std::vector<std::string> out;
        for (const auto& g : minimal_forbidden_line(max_vertices).graphs) out.push_back(to_graph6(g));
        return out;
      },
      py::arg("max_vertices") = 6);
  m.def(
      "enumerate_graphs",
      [](int n) {
        std::vector<std::string> out;
        for (const auto& g : enumerate_graphs(n)) out.push_back(to_graph6(g));
        return out;
      },
      py::arg("n"));
  m.def(
      "is_isomorphic",
      [](const std::string& a, const std::string& b) { return is_isomorphic(from_graph6(a), from_graph6(b)); },
      py::arg("a"), py::arg("b"));
  m.def("classify", &classify_spec, py::arg("spec"), "Ring-side line / co-line predictions and their rules.");
  m.def(
      "catalog",
      [](int max_order) {
        std::vector<std::string> out;
        for (const auto& e : build_catalog(max_order)) out.push_back(e.display_name);
        return out;
      },
      py::arg("max_order") = 16);
  m.def(
      "verify_json",
      [](const std::string& theorem, int max_order) {
        py::gil_scoped_release release;
        return report_to_json(verify(theorem, build_catalog(max_order)));
      },
      py::arg("theorem") = "all", py::arg("max_order") = 16);
}
