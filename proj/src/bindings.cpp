#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "espdag/core.hpp"
#include "espdag/dag.hpp"
#include "espdag/flow.hpp"
#include "espdag/generators.hpp"
#include "espdag/graph.hpp"
#include "espdag/io.hpp"
#include "espdag/reductions.hpp"
#include "espdag/solvers.hpp"
#include "espdag/weight.hpp"

namespace py = pybind11;

namespace {

using namespace espdag;

// Machine indices are 1-based at the Python boundary, matching the file
// formats; parts in multiway partitions stay 0-based (terminal indices).
std::vector<int> machines_out(const Assignment& f) {
  std::vector<int> out;
  out.reserve(f.machine_of.size());
  for (int machine : f.machine_of) out.push_back(machine + 1);
  return out;
}

Assignment machines_in(const std::vector<int>& machines) {
  Assignment f;
  f.machine_of.reserve(machines.size());
  for (int machine : machines) f.machine_of.push_back(machine - 1);
  return f;
}

ExtendedWeight weight_in(const py::handle& value) {
  if (py::isinstance<ExtendedWeight>(value)) return value.cast<ExtendedWeight>();
  if (py::isinstance<py::int_>(value)) return ExtendedWeight(value.cast<long long>());
  if (py::isinstance<py::str>(value)) return ExtendedWeight::parse(value.cast<std::string>());
  throw py::type_error("weights must be Weight, int, or str (floats are not exact)");
}

std::vector<Arc> arcs_in(const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const auto& [tail, head] : arcs) out.push_back({tail, head});
  return out;
}

Instance make_instance(int n, const std::vector<std::pair<int, int>>& arcs,
                       const std::vector<std::vector<py::object>>& p,
                       const std::vector<py::object>& q, const py::object& r,
                       const std::vector<std::string>& labels) {
  Instance instance;
  instance.dag = validate_dag(n, arcs_in(arcs));
  instance.profile.k = p.empty() ? 1 : static_cast<int>(p[0].size());
  for (const auto& row : p) {
    std::vector<ExtendedWeight> converted;
    converted.reserve(row.size());
    for (const py::object& w : row) converted.push_back(weight_in(w));
    instance.profile.p.push_back(std::move(converted));
  }
  for (const py::object& w : q) instance.profile.q.push_back(weight_in(w));
  if (!r.is_none()) instance.r = weight_in(r);
  instance.labels = labels;
  check_instance(instance);
  return instance;
}

UndirectedGraph make_graph(int n, const std::vector<py::tuple>& edges) {
  std::vector<WeightedEdge> converted;
  converted.reserve(edges.size());
  for (const py::tuple& edge : edges) {
    if (edge.size() != 2 && edge.size() != 3) {
      throw py::value_error("edges must be (u, v) or (u, v, weight)");
    }
    WeightedEdge e{edge[0].cast<int>(), edge[1].cast<int>(), ExtendedWeight(1)};
    if (edge.size() == 3) e.weight = weight_in(edge[2]);
    converted.push_back(std::move(e));
  }
  return validate_graph(n, std::move(converted));
}

py::dict stats_out(const SolveStats& stats) {
  py::dict out;
  out["nodes"] = stats.nodes;
  out["arcs"] = stats.arcs;
  out["evaluations"] = stats.evaluations;
  out["seconds"] = stats.seconds;
  return out;
}

py::list provenance_out(const ReductionArtifact& artifact) {
  py::list out;
  for (size_t v = 0; v < artifact.provenance.size(); ++v) {
    const VertexProvenance& origin = artifact.provenance[v];
    py::dict entry;
    entry["id"] = static_cast<int>(v);
    switch (origin.kind) {
      case VertexProvenance::Kind::Original:
        entry["kind"] = "original";
        entry["original"] = origin.original;
        break;
      case VertexProvenance::Kind::Terminal:
        entry["kind"] = "terminal";
        entry["original"] = origin.original;
        entry["terminal_index"] = origin.terminal_index;
        break;
      case VertexProvenance::Kind::Subdivision:
        entry["kind"] = "subdivision";
        entry["tail"] = origin.arc_tail;
        entry["head"] = origin.arc_head;
        break;
      case VertexProvenance::Kind::Padding:
        entry["kind"] = "padding";
        entry["original"] = origin.original;
        entry["index"] = origin.padding_index;
        break;
    }
    out.append(std::move(entry));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_espdag, m) {
  m.doc() = "Exact solvers, reductions and generators for energy-aware DAG partitioning.";

  py::register_exception<Error>(m, "Error");

  py::class_<ExtendedWeight>(m, "Weight")
      .def(py::init([](const py::object& value) { return weight_in(value); }))
      .def_static("infinity", &ExtendedWeight::infinity)
      .def_static("ratio", &ExtendedWeight::ratio)
      .def("is_infinite", &ExtendedWeight::is_infinite)
      .def("__str__", &ExtendedWeight::str)
      .def("__repr__", [](const ExtendedWeight& w) { return "Weight('" + w.str() + "')"; })
      .def("__float__", &ExtendedWeight::to_double)
      .def("__add__",
           [](const ExtendedWeight& a, const py::object& b) { return a + weight_in(b); })
      .def("__eq__",
           [](const ExtendedWeight& a, const py::object& b) { return a == weight_in(b); })
      .def("__lt__", [](const ExtendedWeight& a, const py::object& b) { return a < weight_in(b); })
      .def("__le__", [](const ExtendedWeight& a, const py::object& b) { return a <= weight_in(b); })
      .def("__gt__", [](const ExtendedWeight& a, const py::object& b) { return a > weight_in(b); })
      .def("__ge__",
           [](const ExtendedWeight& a, const py::object& b) { return a >= weight_in(b); });

  py::class_<Dag>(m, "Dag")
      .def_property_readonly("n", &Dag::vertex_count)
      .def_property_readonly("arcs",
                             [](const Dag& dag) {
                               std::vector<std::pair<int, int>> out;
                               for (const Arc& arc : dag.arcs()) out.emplace_back(arc.tail, arc.head);
                               return out;
                             })
      .def_property_readonly("topo_order", &Dag::topo_order)
      .def("out_neighbors", [](const Dag& dag, int v) { return dag.out_neighbors(v); })
      .def("in_neighbors", [](const Dag& dag, int v) { return dag.in_neighbors(v); });

  m.def(
      "validate_dag",
      [](int n, const std::vector<std::pair<int, int>>& arcs) {
        return validate_dag(n, arcs_in(arcs));
      },
      py::arg("n"), py::arg("arcs"));

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("arcs"), py::arg("p"), py::arg("q"),
           py::arg("r") = py::none(), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("dag", [](const Instance& i) { return i.dag; })
      .def_property_readonly("n", [](const Instance& i) { return i.dag.vertex_count(); })
      .def_property_readonly("k", [](const Instance& i) { return i.profile.k; })
      .def_property_readonly("r", [](const Instance& i) -> py::object {
        return i.r ? py::cast(*i.r) : py::none();
      })
      .def_property_readonly("labels", [](const Instance& i) { return i.labels; })
      .def("p", [](const Instance& i, int v, int machine) { return i.profile.p[v][machine - 1]; })
      .def("q", [](const Instance& i, int v) { return i.profile.q[v]; });

  py::class_<UndirectedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", [](const UndirectedGraph& g) { return g.n; })
      .def_property_readonly("edges", [](const UndirectedGraph& g) {
        std::vector<std::tuple<int, int, ExtendedWeight>> out;
        for (const WeightedEdge& e : g.edges) out.emplace_back(e.u, e.v, e.weight);
        return out;
      });

  m.def(
      "indicator",
      [](const Dag& dag, int v, const std::vector<int>& members) {
        return indicator(dag, v, members);
      },
      py::arg("dag"), py::arg("v"), py::arg("members"));
  m.def(
      "transfer_cost",
      [](const Instance& instance, const std::vector<int>& machines) {
        return transfer_cost(instance, machines_in(machines));
      },
      py::arg("instance"), py::arg("machines"));
  m.def(
      "total_cost",
      [](const Instance& instance, const std::vector<int>& machines) {
        return total_cost(instance, machines_in(machines));
      },
      py::arg("instance"), py::arg("machines"));

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("cost", [](const SolveResult& r) { return r.cost; })
      .def_property_readonly("machines", [](const SolveResult& r) { return machines_out(r.witness); })
      .def_property_readonly("algo", [](const SolveResult& r) { return r.algo; })
      .def_property_readonly("stats", [](const SolveResult& r) { return stats_out(r.stats); })
      .def("__repr__", [](const SolveResult& r) {
        return "SolveResult(algo='" + r.algo + "', cost='" + r.cost.str() + "')";
      });

  m.def("solve_brute_force", &solve_brute_force, py::arg("instance"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("solve_two_machines", &solve_two_machines, py::arg("instance"));
  m.def("solve_path_dp", &solve_path_dp, py::arg("instance"));
  m.def("path_dp_cost", &path_dp_cost, py::arg("instance"));
  m.def("solve_local_search", &solve_local_search, py::arg("instance"), py::arg("seed") = 0,
        py::arg("restarts") = 8);
  m.def(
      "solve_sb_brute_force",
      [](const Instance& instance, int ell, long long budget) {
        return solve_sb_brute_force(SbInstance{instance, ell}, budget);
      },
      py::arg("instance"), py::arg("ell"), py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "solve_sbm_brute_force",
      [](const UndirectedGraph& g, int s, int t, int ell, long long budget) {
        SbmCutResult result = solve_sbm_brute_force(g, s, t, ell, budget);
        return py::make_tuple(result.cost, result.source_side);
      },
      py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("ell"),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "solve_multiway_brute_force",
      [](const UndirectedGraph& g, const std::vector<int>& terminals, long long budget) {
        MultiwayCutResult result = solve_multiway_brute_force(g, terminals, budget);
        return py::make_tuple(result.cost, result.part_of);
      },
      py::arg("graph"), py::arg("terminals"), py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "find_clique_brute_force",
      [](const UndirectedGraph& g, int ell, long long budget) {
        CliqueResult result = find_clique_brute_force(g, ell, budget);
        return py::make_tuple(result.found, result.witness);
      },
      py::arg("graph"), py::arg("ell"), py::arg("budget") = kDefaultEnumerationBudget);

  py::class_<FlowNetwork>(m, "FlowNetwork")
      .def(py::init([](int n, int source, int sink,
                       const std::vector<py::tuple>& arcs) {
             FlowNetwork net{n, source, sink, {}};
             for (const py::tuple& arc : arcs) {
               if (arc.size() != 3) throw py::value_error("arcs must be (tail, head, capacity)");
               net.arcs.push_back(
                   {arc[0].cast<int>(), arc[1].cast<int>(), weight_in(arc[2])});
             }
             return net;
           }),
           py::arg("n"), py::arg("source"), py::arg("sink"), py::arg("arcs"));

  py::class_<MinCutResult>(m, "MinCutResult")
      .def_property_readonly("value", [](const MinCutResult& r) { return r.value; })
      .def_property_readonly("source_side", [](const MinCutResult& r) { return r.source_side; })
      .def_property_readonly("cut_arcs", [](const MinCutResult& r) { return r.cut_arcs; });

  m.def("min_st_cut", &min_st_cut, py::arg("network"));
  m.def("brute_force_min_cut", &brute_force_min_cut, py::arg("network"),
        py::arg("max_nodes") = 20);

  py::class_<GadgetGraph>(m, "GadgetGraph")
      .def_property_readonly("network", [](const GadgetGraph& g) { return g.network; })
      .def_property_readonly("vplus_of", [](const GadgetGraph& g) { return g.vplus_of; })
      .def_property_readonly("vminus_of", [](const GadgetGraph& g) { return g.vminus_of; })
      .def_property_readonly("s_node", [](const GadgetGraph& g) { return g.s_node; })
      .def_property_readonly("t_node", [](const GadgetGraph& g) { return g.t_node; })
      .def_property_readonly("node_count", [](const GadgetGraph& g) { return g.network.n; })
      .def_property_readonly("arc_count",
                             [](const GadgetGraph& g) { return g.network.arcs.size(); });

  m.def("build_two_machine_gadget", &build_two_machine_gadget, py::arg("instance"));

  py::class_<ReductionArtifact>(m, "ReductionArtifact")
      .def_property_readonly("instance", [](const ReductionArtifact& a) { return a.instance; })
      .def_property_readonly("ell",
                             [](const ReductionArtifact& a) -> py::object {
                               return a.ell ? py::cast(*a.ell) : py::none();
                             })
      .def_property_readonly("original_count",
                             [](const ReductionArtifact& a) { return a.original_count; })
      .def_property_readonly("provenance", &provenance_out);

  m.def(
      "reduce_multiway_to_espdag",
      [](const UndirectedGraph& graph, const std::vector<int>& terminals, const py::object& r,
         bool unit_costs) {
        MultiwayInstance mw{graph, terminals, {}};
        if (!r.is_none()) mw.r = weight_in(r);
        return reduce_multiway_to_espdag(mw, unit_costs);
      },
      py::arg("graph"), py::arg("terminals"), py::arg("r") = py::none(),
      py::arg("unit_costs") = false);
  m.def(
      "lift_multiway_partition",
      [](const ReductionArtifact& artifact, const std::vector<int>& part_of) {
        return machines_out(lift_multiway_partition(artifact, part_of));
      },
      py::arg("artifact"), py::arg("part_of"));
  m.def(
      "project_espdag_assignment",
      [](const ReductionArtifact& artifact, const std::vector<int>& machines) {
        return project_espdag_assignment(artifact, machines_in(machines));
      },
      py::arg("artifact"), py::arg("machines"));

  py::class_<SbmInstance>(m, "SbmInstance")
      .def_property_readonly("graph", [](const SbmInstance& i) { return i.graph; })
      .def_property_readonly("s", [](const SbmInstance& i) { return i.s; })
      .def_property_readonly("t", [](const SbmInstance& i) { return i.t; })
      .def_property_readonly("r",
                             [](const SbmInstance& i) -> py::object {
                               return i.r ? py::cast(*i.r) : py::none();
                             })
      .def_property_readonly("ell", [](const SbmInstance& i) { return i.ell; });

  m.def("reduce_clique_to_sbm", &reduce_clique_to_sbm, py::arg("graph"), py::arg("ell"));
  m.def("reduce_sbm_to_sbesbp", &reduce_sbm_to_sbesbp, py::arg("sbm"));

  m.def(
      "gen_random_dag_instance",
      [](std::uint64_t seed, int n, int m, int k, long long lo, long long hi,
         long long denominator, double infinite_fraction) {
        GenSpec spec{seed, n, m, k, 0, {lo, hi, denominator}, infinite_fraction,
                     GenShape::RandomDag};
        return gen_random_dag_instance(spec);
      },
      py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("k") = 2, py::arg("lo") = 0,
      py::arg("hi") = 10, py::arg("denominator") = 1, py::arg("infinite_fraction") = 0.0);
  m.def(
      "gen_path_instance",
      [](std::uint64_t seed, int n, int k, long long lo, long long hi, long long denominator,
         double infinite_fraction) {
        GenSpec spec{seed, n,  0, k, 0, {lo, hi, denominator}, infinite_fraction,
                     GenShape::Path};
        return gen_path_instance(spec);
      },
      py::arg("seed"), py::arg("n"), py::arg("k") = 2, py::arg("lo") = 0, py::arg("hi") = 10,
      py::arg("denominator") = 1, py::arg("infinite_fraction") = 0.0);
  m.def(
      "gen_regular_graph",
      [](std::uint64_t seed, int n, int d) {
        GenSpec spec{seed, n, 0, 2, d, {}, 0.0, GenShape::RegularGraph};
        return gen_regular_graph(spec);
      },
      py::arg("seed"), py::arg("n"), py::arg("d"));

  py::class_<ParsedInstance>(m, "ParsedInstance")
      .def_property_readonly("instance", [](const ParsedInstance& p) { return p.instance; })
      .def_property_readonly("ell", [](const ParsedInstance& p) -> py::object {
        return p.ell ? py::cast(*p.ell) : py::none();
      });

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); },
        py::arg("text"));
  m.def(
      "serialize_instance",
      [](const Instance& instance, const py::object& ell) {
        std::optional<int> bound;
        if (!ell.is_none()) bound = ell.cast<int>();
        return serialize_instance(instance, bound);
      },
      py::arg("instance"), py::arg("ell") = py::none());
  m.def(
      "export_dot",
      [](const Instance& instance, const py::object& machines) {
        if (machines.is_none()) return export_dot(instance);
        Assignment f = machines_in(machines.cast<std::vector<int>>());
        return export_dot(instance, &f);
      },
      py::arg("instance"), py::arg("machines") = py::none());
  m.def("export_gadget_dot", &export_gadget_dot, py::arg("gadget"));
  m.def("serialize_provenance", &serialize_provenance, py::arg("artifact"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
