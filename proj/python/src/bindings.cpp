#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempo/design.hpp"
#include "tempo/graph_io.hpp"
#include "tempo/hardness.hpp"
#include "tempo/random_temporal.hpp"
#include "tempo/reachability.hpp"
#include "tempo/removal.hpp"
#include "tempo/temporal_graph.hpp"

namespace py = pybind11;
using namespace tempo;

PYBIND11_MODULE(_core, m) {
    m.doc() = "design, verify and sparsify temporally connected graphs";

    py::class_<TimeEdge>(m, "TimeEdge")
        .def(py::init<Vertex, Vertex, Label>(), py::arg("from_vertex"), py::arg("to_vertex"),
             py::arg("label"))
        .def_readonly("from_vertex", &TimeEdge::from)
        .def_readonly("to_vertex", &TimeEdge::to)
        .def_readonly("label", &TimeEdge::label)
        .def("__repr__", [](const TimeEdge& te) {
            return "TimeEdge(" + std::to_string(te.from) + ", " + std::to_string(te.to) + ", " +
                   std::to_string(te.label) + ")";
        });

    py::class_<Journey>(m, "Journey")
        .def_readonly("steps", &Journey::steps)
        .def_readonly("arrival_time", &Journey::arrival_time)
        .def("__len__", [](const Journey& j) { return j.steps.size(); });

    py::class_<TemporalGraph>(m, "TemporalGraph")
        .def(py::init<int, bool>(), py::arg("vertex_count"), py::arg("directed") = false)
        .def_property_readonly("vertex_count", &TemporalGraph::vertex_count)
        .def_property_readonly("directed", &TemporalGraph::directed)
        .def_property_readonly("edge_count", &TemporalGraph::edge_count)
        .def("add_edge", [](TemporalGraph& g, Vertex u, Vertex v,
                            const std::vector<Label>& labels) { g.add_edge(u, v, labels); },
             py::arg("u"), py::arg("v"), py::arg("labels") = std::vector<Label>{})
        .def("add_label", &TemporalGraph::add_label)
        .def("has_edge", &TemporalGraph::has_edge)
        .def("labels", &TemporalGraph::labels, py::return_value_policy::copy)
        .def("edges",
             [](const TemporalGraph& g) {
                 std::vector<std::tuple<Vertex, Vertex, std::vector<Label>>> out;
                 for (const auto& [edge, labels] : g.edges())
                     out.emplace_back(edge.first, edge.second, labels);
                 return out;
             })
        .def("__eq__", [](const TemporalGraph& a, const TemporalGraph& b) { return a == b; });

    m.def("cost", &cost);
    m.def("is_slse", &is_slse);
    m.def("validate_journey", &validate_journey);
    m.def("remove_label", &remove_label);

    py::class_<ForemostResult>(m, "ForemostResult")
        .def_readonly("source", &ForemostResult::source)
        .def_readonly("start_time", &ForemostResult::start_time)
        .def_readonly("arrival", &ForemostResult::arrival);

    m.def("foremost", &foremost, py::arg("graph"), py::arg("source"), py::arg("start_time") = 0);
    m.def("foremost_oracle", &foremost_oracle, py::arg("graph"), py::arg("source"),
          py::arg("start_time") = 0, py::arg("state_budget") = std::size_t{1} << 22);
    m.def("reconstruct", &reconstruct);
    m.def("is_temporally_connected", &is_temporally_connected, py::arg("graph"),
          py::arg("threads") = 1);

    py::class_<TreeDesign>(m, "TreeDesign")
        .def_readonly("root", &TreeDesign::root)
        .def_readonly("parent", &TreeDesign::parent)
        .def_readonly("radius", &TreeDesign::radius)
        .def_readonly("labelling", &TreeDesign::labelling);

    py::class_<HypercubeDesign>(m, "HypercubeDesign")
        .def_readonly("k", &HypercubeDesign::k)
        .def_readonly("labelling", &HypercubeDesign::labelling);

    m.def("spanning_tree_labelling", &spanning_tree_labelling, py::arg("graph"),
          py::arg("root") = 0);
    m.def("star_optimal_labelling", &star_optimal_labelling);
    m.def("tree_lower_bound_check", &tree_lower_bound_check);
    m.def("hypercube_design", &hypercube_design);
    m.def("hypercube_journey", &hypercube_journey);
    m.def("k4_redundant", &k4_redundant);
    m.def("clique_slse_reduce", &clique_slse_reduce);

    py::class_<RemovalResult>(m, "RemovalResult")
        .def_readonly("removed", &RemovalResult::removed)
        .def_readonly("profit", &RemovalResult::profit)
        .def_readonly("exact", &RemovalResult::exact)
        .def_readonly("residual", &RemovalResult::residual);

    m.def("is_minimal", &is_minimal);
    m.def("greedy_removal", &greedy_removal);
    m.def("removal_profit_exact",
          [](const TemporalGraph& g, std::size_t label_cap, std::uint64_t node_budget,
             std::uint64_t order_seed) {
              ExactOptions options;
              options.label_cap = label_cap;
              if (node_budget > 0) options.node_budget = node_budget;
              options.order_seed = order_seed;
              return removal_profit_exact(g, options);
          },
          py::arg("graph"), py::arg("label_cap") = 22, py::arg("node_budget") = 0,
          py::arg("order_seed") = 0);

    py::class_<XorFormula>(m, "XorFormula")
        .def_readonly("variable_count", &XorFormula::variable_count)
        .def_readonly("clauses", &XorFormula::clauses);

    py::class_<GadgetGraph>(m, "GadgetGraph")
        .def_readonly("graph", &GadgetGraph::graph)
        .def_readonly("t0", &GadgetGraph::t0);

    py::class_<NecessaryLabelsReport>(m, "NecessaryLabelsReport")
        .def_readonly("violations", &NecessaryLabelsReport::violations)
        .def("all_ok", &NecessaryLabelsReport::all_ok);

    m.def("parse_formula", &parse_formula_text);
    m.def("satisfied_count", &satisfied_count);
    m.def("build_gadget", &build_gadget);
    m.def("assignment_to_labelling",
          py::overload_cast<const XorFormula&, const Assignment&>(&assignment_to_labelling));
    m.def("labelling_to_assignment",
          py::overload_cast<const XorFormula&, const TemporalGraph&>(&labelling_to_assignment));
    m.def("verify_necessary_labels",
          py::overload_cast<const XorFormula&, const TemporalGraph&>(&verify_necessary_labels));

    py::class_<LabelPartition>(m, "LabelPartition")
        .def_readonly("alpha", &LabelPartition::alpha)
        .def_readonly("ranges", &LabelPartition::ranges)
        .def("colour_of", &LabelPartition::colour_of);

    py::class_<RouterReport>(m, "RouterReport")
        .def_readonly("n", &RouterReport::n)
        .def_readonly("clique", &RouterReport::clique)
        .def_readonly("p", &RouterReport::p)
        .def_readonly("alpha", &RouterReport::alpha)
        .def_readonly("gamma", &RouterReport::gamma)
        .def_readonly("seed", &RouterReport::seed)
        .def_readonly("kept_labels", &RouterReport::kept_labels)
        .def_readonly("tc_verdict", &RouterReport::tc_verdict)
        .def_readonly("path_count", &RouterReport::path_count)
        .def_readonly("unattached", &RouterReport::unattached);

    m.def("partition_labels", &partition_labels);
    m.def("uniform_random_labelling", &uniform_random_labelling);
    m.def("gnp_instance", &gnp_instance);
    m.def("clique_router_sparsify", &clique_router_sparsify);
    m.def("gnp_router_sparsify", &gnp_router_sparsify);

    m.def("parse_graph", &parse_graph);
    m.def("format_graph", &format_graph);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
