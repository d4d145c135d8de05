#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyperppr/clustering.hpp"
#include "hyperppr/diffusion.hpp"
#include "hyperppr/hypergraph.hpp"
#include "hyperppr/io.hpp"
#include "hyperppr/laplacian.hpp"
#include "hyperppr/sweep.hpp"
#include "hyperppr/synthetic.hpp"
#include "hyperppr/verify.hpp"

namespace py = pybind11;
using namespace hyperppr;

namespace {

Hypergraph build_from_lists(std::size_t n,
                            const std::vector<std::pair<double, std::vector<VertexId>>>& edges) {
  std::vector<Hyperedge> list;
  list.reserve(edges.size());
  for (const auto& [w, members] : edges) list.push_back(Hyperedge{w, members});
  return Hypergraph::build(n, std::move(list));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hypergraph clustering via personalized pagerank";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputeError>(m, "ComputeError", PyExc_RuntimeError);

  py::class_<VertexSet>(m, "VertexSet")
      .def(py::init<std::vector<VertexId>>())
      .def("members", &VertexSet::members)
      .def("__len__", &VertexSet::size)
      .def("__contains__", &VertexSet::contains)
      .def("__eq__", [](const VertexSet& a, const VertexSet& b) { return a == b; });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def_static("build", &build_from_lists, py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::vertex_count)
      .def_property_readonly("m", &Hypergraph::edge_count)
      .def("degree", &Hypergraph::degree)
      .def("total_volume", &Hypergraph::total_volume)
      .def("volume", &Hypergraph::volume)
      .def("is_graph", &Hypergraph::is_graph);

  m.def("parse", [](const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
  });
  m.def("serialize", [](const Hypergraph& H) {
    std::ostringstream out;
    serialize_hypergraph(H, out);
    return out.str();
  });
  m.def("load", [](const std::string& path) { return load_hypergraph(path); });

  m.def(
      "measure",
      [](const Hypergraph& H, const std::vector<VertexId>& S) {
        const SubsetMeasure r = measure(H, VertexSet(S));
        return py::make_tuple(r.volume, r.cut, r.conductance);
      },
      py::arg("H"), py::arg("S"), "returns (volume, cut, conductance)");

  m.def(
      "ppr",
      [](const Hypergraph& H, VertexId seed, double alpha, double dt, double total_time,
         double theta, bool exact) {
        if (seed >= H.vertex_count()) throw InputError("seed vertex out of range");
        if (exact) return hypergraph_ppr_exact(H, chi(H, seed), alpha).rho;
        PprParams params;
        params.alpha = alpha;
        params.dt = dt;
        params.total_time = total_time;
        params.theta = theta;
        return euler_ppr(H, chi(H, seed), params).rho;
      },
      py::arg("H"), py::arg("seed"), py::arg("alpha") = 0.1, py::arg("dt") = 1.0,
      py::arg("total_time") = 30.0, py::arg("theta") = 1e-5, py::arg("exact") = false);

  m.def("apply_laplacian", &apply_laplacian, py::arg("H"), py::arg("x"),
        py::arg("normalized") = true, py::arg("tie_tol") = 0.0);

  m.def(
      "sweep",
      [](const Hypergraph& H, const std::vector<double>& x, double mu) {
        const SweepCut cut = best_sweep(H, x, mu);
        return py::make_tuple(cut.set.members(), cut.conductance);
      },
      py::arg("H"), py::arg("x"), py::arg("mu") = 0.5, "returns (members, conductance)");

  m.def(
      "local_clustering",
      [](const Hypergraph& H, VertexId seed, double mu, double epsilon) {
        LocalParams params;
        params.mu = mu;
        params.epsilon = epsilon;
        const ClusterResult r = local_clustering(H, seed, params);
        return py::make_tuple(r.set.members(), r.conductance, r.alpha_used);
      },
      py::arg("H"), py::arg("seed"), py::arg("mu") = 0.5, py::arg("epsilon") = 0.9,
      "returns (members, conductance, alpha)");

  m.def(
      "global_clustering",
      [](const Hypergraph& H, double epsilon) {
        LocalParams params;
        params.epsilon = epsilon;
        const ClusterResult r = global_clustering(H, params);
        return py::make_tuple(r.set.members(), r.conductance, r.seed);
      },
      py::arg("H"), py::arg("epsilon") = 0.9, "returns (members, conductance, seed)");

  m.def(
      "brute_force_conductance",
      [](const Hypergraph& H) {
        const BruteForceResult r = brute_force_conductance(H);
        return py::make_tuple(r.set.members(), r.conductance);
      },
      py::arg("H"));

  m.def(
      "planted",
      [](std::uint32_t clusters, std::uint32_t cluster_size, std::uint32_t edges_per_cluster,
         std::uint32_t edge_size, std::uint32_t crossing, std::uint64_t rng_seed) {
        PlantedParams params;
        params.clusters = clusters;
        params.cluster_size = cluster_size;
        params.edges_per_cluster = edges_per_cluster;
        params.edge_size = edge_size;
        params.crossing_edges = crossing;
        params.rng_seed = rng_seed;
        return generate_planted(params);
      },
      py::arg("clusters") = 2, py::arg("cluster_size") = 16, py::arg("edges_per_cluster") = 40,
      py::arg("edge_size") = 3, py::arg("crossing") = 1, py::arg("rng_seed") = 1);
}
