#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trussdec/generate.hpp"
#include "trussdec/graph.hpp"
#include "trussdec/kcore.hpp"
#include "trussdec/triangle.hpp"
#include "trussdec/truss_parallel.hpp"
#include "trussdec/truss_serial.hpp"

namespace py = pybind11;
using namespace trussdec;

namespace {

// Canonicalized graph plus the augmented arrays the decompositions need.
struct PyGraph {
    TrussGraph tg;

    static PyGraph from_raw(const RawEdgeList& raw) {
        return PyGraph{build_truss_graph(canonicalize(raw))};
    }

    std::uint32_t n() const { return tg.n(); }
    std::uint32_t m() const { return tg.m(); }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        out.reserve(tg.m());
        for (const auto& [u, v] : tg.el)
            out.emplace_back(tg.csr.label_of(u), tg.csr.label_of(v));
        return out;
    }

    py::dict stats_dict() const {
        GraphStats st = stats(tg.csr);
        py::dict d;
        d["n"] = st.n;
        d["m"] = st.m;
        d["d_max"] = st.d_max;
        d["wedge_count"] = st.wedge_count;
        d["sum_deg_sq"] = st.sum_deg_sq;
        d["sum_dplus_sq"] = st.sum_dplus_sq;
        d["core_array_bytes"] = TrussGraph::core_array_bytes(st.n, st.m);
        return d;
    }

    std::vector<std::uint32_t> truss(const std::string& algorithm, int workers) const {
        if (algorithm == "pkt") return truss_parallel(tg, workers).result.truss;
        if (algorithm == "wc") return truss_wc(tg, support_am4(tg, workers)).truss;
        if (algorithm == "oracle") return truss_oracle(tg.csr).truss;
        throw std::invalid_argument("unknown algorithm: " + algorithm);
    }
};

}  // namespace

PYBIND11_MODULE(_trussdec, mod) {
    mod.doc() = "Parallel k-truss decomposition for sparse undirected graphs";

    py::class_<PyGraph>(mod, "Graph")
        .def_static(
            "from_edges",
            [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
                return PyGraph::from_raw(RawEdgeList{edges});
            },
            py::arg("edges"))
        .def_static(
            "from_file",
            [](const std::string& path) { return PyGraph::from_raw(read_edge_list(path)); },
            py::arg("path"))
        .def_property_readonly("n", &PyGraph::n)
        .def_property_readonly("m", &PyGraph::m)
        .def("edges", &PyGraph::edges)
        .def("stats", &PyGraph::stats_dict)
        .def(
            "support",
            [](const PyGraph& g, int workers) { return support_am4(g.tg, workers); },
            py::arg("workers") = 1)
        .def(
            "triangle_count",
            [](const PyGraph& g, int workers) { return triangle_count(g.tg, workers); },
            py::arg("workers") = 1)
        .def(
            "coreness",
            [](const PyGraph& g, int workers) { return kcore_parallel(g.tg.csr, workers).core; },
            py::arg("workers") = 1)
        .def("reorder_by_coreness",
             [](const PyGraph& g) {
                 auto perm = coreness_order(kcore_serial(g.tg.csr));
                 return PyGraph{build_truss_graph(reorder(g.tg.csr, perm))};
             })
        .def("truss", &PyGraph::truss, py::arg("algorithm") = "pkt", py::arg("workers") = 1)
        .def(
            "ktruss_components",
            [](const PyGraph& g, std::uint32_t k, int workers) {
                auto res = truss_parallel(g.tg, workers).result;
                std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> out;
                if (k > res.t_max) return out;
                for (const auto& comp : ktruss_subgraphs(g.tg, res, k)) {
                    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
                    for (EdgeId e : comp)
                        edges.emplace_back(g.tg.csr.label_of(g.tg.el[e].first),
                                           g.tg.csr.label_of(g.tg.el[e].second));
                    out.push_back(std::move(edges));
                }
                return out;
            },
            py::arg("k"), py::arg("workers") = 1);

    mod.def(
        "generate_er",
        [](std::uint32_t n, double p, std::uint64_t seed) {
            return PyGraph::from_raw(generate_er(n, p, seed));
        },
        py::arg("n"), py::arg("p"), py::arg("seed") = 1);
    mod.def(
        "generate_rmat",
        [](std::uint32_t scale, std::uint32_t edge_factor, std::uint64_t seed, double a,
           double b, double c, double d) {
            return PyGraph::from_raw(generate_rmat(scale, edge_factor, seed, a, b, c, d));
        },
        py::arg("scale"), py::arg("edge_factor") = 16, py::arg("seed") = 1,
        py::arg("a") = 0.57, py::arg("b") = 0.19, py::arg("c") = 0.19, py::arg("d") = 0.05);
}
