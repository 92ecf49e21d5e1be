// Thin extension module. Structured values cross as JSON text; the Python
// package decodes them and turns "num/den" strings into Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kcell/io.hpp"
#include "kcell/stable.hpp"
#include "kcell/suite.hpp"

namespace py = pybind11;
using namespace kcell;

namespace {

StableRibbonGraph load(const std::string& text) { return StableRibbonGraph(graph_from_json(parse_json(text))); }

RationalVector rationals(const std::vector<std::string>& v) {
  RationalVector out;
  for (const auto& s : v) out.push_back(rational_from_json(Json(s)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_kcell, m) {
  py::register_exception<Error>(m, "KcellError", PyExc_ValueError);

  m.def("intersection_number",
        [](int genus, const std::vector<int>& d, const std::vector<std::string>& perimeters, int jobs) {
          const IntersectionResult r = intersection_number({genus, d, rationals(perimeters), jobs});
          return intersection_to_json(r).dump();
        },
        py::arg("genus"), py::arg("d"), py::arg("perimeters"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def("enumerate_trivalent", [](int genus, int faces) { return classes_to_json(enumerate_trivalent(genus, faces)).dump(); },
        py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_cells", [](int genus, int faces) { return cells_to_json(enumerate_cells(genus, faces)).dump(); },
        py::call_guard<py::gil_scoped_release>());

  m.def("inspect", [](const std::string& graph) { return inspect_json(load(graph)).dump(); });
  m.def("contract", [](const std::string& graph, const std::vector<int>& edges) {
    return graph_to_json(contract_set(load(graph), edges).data()).dump();
  });
  m.def("is_contractible", [](const std::string& graph, const std::vector<int>& edges) {
    return is_contractible(load(graph), edges);
  });
  m.def("canonical_key", [](const std::string& graph) { return canonical_key(load(graph)).hex(); });

  m.def("cell", [](const std::string& graph, const std::vector<std::string>& perimeters) {
    return cell_to_json(cell_polytope(load(graph), rationals(perimeters))).dump();
  });
  m.def("fiber_integral", [](const std::string& graph, int face, const std::vector<std::string>& lengths) {
    return rational_to_json(fiber_integral_alpha(polygon_fiber(load(graph), face, rationals(lengths)))).dump();
  });

  m.def("full_map", [](const std::string& points) {
    Json out = Json::array();
    for (const auto& f : full_map(parse_points(points))) out.push_back(projective_to_json(f));
    return out.dump();
  });

  m.def("default_perimeters", [](int faces) { return rationals_to_json(default_perimeters(faces)).dump(); });
  m.def("random_generic_perimeters",
        [](int faces, unsigned long seed) { return rationals_to_json(random_generic_perimeters(faces, seed)).dump(); });

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& n : suite_names())
      if (n != "all") out.push_back(n);
    return out;
  });
  m.def("run_suite",
        [](const std::string& name, unsigned long seed, double scale) {
          Json out = Json::array();
          for (const auto& r : run_suites(name, {seed, 1, scale})) out.push_back(report_to_json(r));
          return out.dump();
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("scale") = 1.0, py::call_guard<py::gil_scoped_release>());
}
