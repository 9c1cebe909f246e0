#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genusone/components.hpp"
#include "genusone/graph.hpp"
#include "genusone/io.hpp"
#include "genusone/reduction.hpp"
#include "genusone/stability.hpp"

namespace py = pybind11;
using namespace genusone;

namespace {

TangentData tangents_from_strings(const std::vector<std::vector<std::string>>& rows) {
  TangentData data;
  for (const auto& row : rows) {
    std::vector<Rational> vec;
    for (const auto& s : row) vec.emplace_back(s);
    data.vectors.push_back(std::move(vec));
  }
  return data;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Decorated dual graphs of pointed genus-one maps";

  py::register_exception<SchemaError>(mod, "SchemaError");

  py::class_<Vertex>(mod, "Vertex")
      .def(py::init<>())
      .def_readwrite("id", &Vertex::id)
      .def_readwrite("genus", &Vertex::genus)
      .def_readwrite("degree", &Vertex::degree)
      .def_readwrite("marks", &Vertex::marks);

  py::class_<Edge>(mod, "Edge")
      .def(py::init<std::string, std::string>())
      .def_readonly("a", &Edge::a)
      .def_readonly("b", &Edge::b)
      .def("is_loop", &Edge::is_loop);

  py::class_<EllipticPoint>(mod, "EllipticPoint")
      .def(py::init<>())
      .def_readwrite("branches", &EllipticPoint::branches)
      .def("multiplicity", &EllipticPoint::multiplicity);

  py::class_<DualGraph>(mod, "DualGraph")
      .def(py::init<>())
      .def_readwrite("target_dim", &DualGraph::target_dim)
      .def_readwrite("vertices", &DualGraph::vertices)
      .def_readwrite("edges", &DualGraph::edges)
      .def_readwrite("elliptic", &DualGraph::elliptic)
      .def("normalize", &DualGraph::normalize)
      .def("total_degree", &DualGraph::total_degree)
      .def("mark_count", &DualGraph::mark_count)
      .def("__eq__", [](const DualGraph& a, const DualGraph& b) { return a == b; });

  py::class_<ValidationReport>(mod, "ValidationReport")
      .def_readonly("problems", &ValidationReport::problems)
      .def("ok", &ValidationReport::ok);

  py::class_<StabilityParams>(mod, "StabilityParams")
      .def(py::init<int, int, int, int>(), py::arg("m"), py::arg("n"), py::arg("r"),
           py::arg("d"))
      .def_readwrite("m", &StabilityParams::m)
      .def_readwrite("n", &StabilityParams::n)
      .def_readwrite("r", &StabilityParams::r)
      .def_readwrite("d", &StabilityParams::d);

  py::class_<Reason>(mod, "Reason")
      .def_property_readonly("code", [](const Reason& r) { return to_string(r.code); })
      .def_readonly("detail", &Reason::detail);

  py::class_<StabilityResult>(mod, "StabilityResult")
      .def_readonly("stable", &StabilityResult::stable)
      .def_readonly("reasons", &StabilityResult::reasons)
      .def("__bool__", [](const StabilityResult& r) { return r.stable; });

  py::class_<StabilityInterval>(mod, "StabilityInterval")
      .def_readonly("empty", &StabilityInterval::empty)
      .def_readonly("lower", &StabilityInterval::lower)
      .def_readonly("upper", &StabilityInterval::upper)
      .def("contains", &StabilityInterval::contains);

  py::class_<RewriteStep>(mod, "RewriteStep")
      .def_property_readonly("kind", [](const RewriteStep& s) { return to_string(s.kind); })
      .def_readonly("affected", &RewriteStep::affected)
      .def_readonly("level_before", &RewriteStep::level_before)
      .def_readonly("level_after", &RewriteStep::level_after)
      .def_readonly("elliptic_before", &RewriteStep::elliptic_before)
      .def_readonly("elliptic_after", &RewriteStep::elliptic_after)
      .def_readonly("before", &RewriteStep::before)
      .def_readonly("after", &RewriteStep::after);

  py::class_<ReductionTrace>(mod, "ReductionTrace")
      .def_readonly("initial", &ReductionTrace::initial)
      .def_readonly("steps", &ReductionTrace::steps)
      .def_readonly("final", &ReductionTrace::final)
      .def_property_readonly("cause",
                             [](const ReductionTrace& t) { return to_string(t.cause); });

  py::class_<TailSpec>(mod, "TailSpec")
      .def(py::init<>())
      .def_readwrite("degree", &TailSpec::degree)
      .def_readwrite("marks", &TailSpec::marks);

  py::class_<ComponentDescriptor>(mod, "ComponentDescriptor")
      .def(py::init<>())
      .def_readwrite("principal", &ComponentDescriptor::principal)
      .def_readwrite("tails", &ComponentDescriptor::tails)
      .def_readwrite("core_marks", &ComponentDescriptor::core_marks)
      .def("k", &ComponentDescriptor::k)
      .def("j", &ComponentDescriptor::j);

  mod.def("validate", &validate);
  mod.def("is_connected", &is_connected);
  mod.def("arithmetic_genus", &arithmetic_genus);
  mod.def("core", &core);
  mod.def("core_kind", [](const DualGraph& g) {
    auto c = core_kind(g);
    return std::make_pair(to_string(c.kind), c.multiplicity);
  });
  mod.def("level", &level);
  mod.def("distinguished_points", &distinguished_points);
  mod.def("fundamental_decomposition", [](const DualGraph& g) {
    auto fd = fundamental_decomposition(g);
    std::vector<Subcurve> tails;
    for (const auto& t : fd.tails) tails.push_back(t.vertex_set);
    return std::make_pair(fd.core, tails);
  });

  mod.def("is_m_stable_map", &is_m_stable_map);
  mod.def("is_m_stable_curve", &is_m_stable_curve);
  mod.def("stability_interval", &stability_interval);
  mod.def("canonical_degree", &canonical_degree);
  mod.def("is_canonically_polarized", &is_canonically_polarized);
  mod.def("polarization_power_bound", &polarization_power_bound);
  mod.def("augment_with_hyperplane_marks", &augment_with_hyperplane_marks);

  mod.def("blow_up_core_marks", &blow_up_core_marks);
  mod.def("contract_core", &contract_core);
  mod.def("stabilize", &stabilize);
  mod.def("reduce", &reduce);

  mod.def("enumerate_components", &enumerate_components);
  mod.def("component_dimension", &component_dimension);
  mod.def("generic_element_graph", &generic_element_graph);
  mod.def("is_smoothable", [](const DualGraph& g) { return is_smoothable(g); });
  mod.def("is_smoothable_with_tangents",
          [](const DualGraph& g, const std::vector<std::vector<std::string>>& rows) {
            return is_smoothable(g, tangents_from_strings(rows));
          });
  mod.def("irreducibility_threshold", &irreducibility_threshold);
  mod.def("smoothness_certificate", [](int m, int n, int r, int d) {
    return to_string(smoothness_certificate(m, n, r, d));
  });

  mod.def("graph_to_json", [](const DualGraph& g) { return graph_to_string(g, -1); });
  mod.def("graph_from_json", &graph_from_string);
  mod.def("graph_to_dot", &graph_to_dot);
  mod.def("trace_to_json",
          [](const ReductionTrace& t) { return trace_to_json(t).dump(); });
}
