#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "helly/algorithms.hpp"
#include "helly/generators.hpp"
#include "helly/graph.hpp"
#include "helly/oracles.hpp"

namespace py = pybind11;

namespace {

py::dict table_dict(const helly::EccentricityTable& t) {
    py::dict d;
    d["ecc"] = t.ecc;
    d["rad"] = t.rad;
    d["diam"] = t.diam;
    d["center"] = t.center;
    return d;
}

int two_delta_from(double delta) {
    double twice = 2.0 * delta;
    long rounded = std::lround(twice);
    if (std::abs(twice - rounded) > 1e-9 || rounded < 0)
        throw py::value_error("delta must be a non-negative half-integer");
    return static_cast<int>(rounded);
}

}  // namespace

PYBIND11_MODULE(hellyecc, m) {
    m.doc() = "Eccentricities, radius, diameter and center of Helly graphs";

    static py::exception<helly::NotHellyError> not_helly(m, "NotHellyError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const helly::NotHellyError& e) {
            PyErr_SetString(not_helly.ptr(), e.what());
        } catch (const helly::GraphError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const helly::CapExceededError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<helly::Graph>(m, "Graph")
        .def_property_readonly("n", &helly::Graph::num_vertices)
        .def_property_readonly("m", &helly::Graph::num_edges)
        .def("neighbors",
             [](const helly::Graph& g, int v) {
                 auto nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             })
        .def("edges", &helly::Graph::edges)
        .def("__repr__", [](const helly::Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("load_graph", &helly::load_graph, py::arg("text"));
    m.def("to_edge_list", &helly::to_edge_list, py::arg("graph"));

    m.def(
        "gen",
        [](const std::string& family, const std::vector<int>& sizes, std::uint64_t seed) {
            helly::GenResult res = helly::gen({family, sizes, seed});
            py::dict d;
            d["graph"] = res.graph;
            d["expected_helly"] = res.expected_helly;
            d["gamma_lower_bound"] =
                res.gamma_lower_bound ? py::cast(*res.gamma_lower_bound) : py::none();
            d["note"] = res.note;
            return d;
        },
        py::arg("family"), py::arg("sizes"), py::arg("seed") = 0);

    m.def("bfs", &helly::bfs, py::arg("graph"), py::arg("source"));
    m.def("multi_source_bfs", &helly::multi_source_bfs, py::arg("graph"), py::arg("sources"));
    m.def("ball", &helly::ball, py::arg("graph"), py::arg("vertex"), py::arg("radius"));
    m.def("interval", &helly::interval, py::arg("graph"), py::arg("x"), py::arg("y"));

    m.def(
        "all_ecc",
        [](const helly::Graph& g, const std::string& algo, py::object known_delta, int threads,
           bool debug) {
            if (algo == "oracle") return table_dict(helly::all_ecc_bruteforce(g, threads));
            if (algo == "sqrt") return table_dict(helly::all_ecc_sqrt(g, debug));
            if (algo == "hyp") {
                std::optional<int> two_delta;
                if (!known_delta.is_none()) two_delta = two_delta_from(known_delta.cast<double>());
                return table_dict(helly::all_ecc_hyperbolic(g, two_delta, debug));
            }
            throw py::value_error("algo must be one of: oracle, sqrt, hyp");
        },
        py::arg("graph"), py::arg("algo") = "oracle", py::arg("known_delta") = py::none(),
        py::arg("threads") = 1, py::arg("debug_invariants") = false);

    m.def(
        "find_center",
        [](const helly::Graph& g) {
            auto res = helly::find_center(g);
            return py::make_tuple(res.vertex, res.radius);
        },
        py::arg("graph"));

    m.def(
        "ecc_at_most",
        [](const helly::Graph& g, int k, bool debug) {
            auto th = helly::ecc_at_most_k(g, k, debug);
            py::dict d;
            for (int v = 0; v < static_cast<int>(th.ecc.size()); v++)
                if (th.ecc[v] >= 0) d[py::int_(v)] = th.ecc[v];
            return py::make_tuple(d, th.rad, th.center);
        },
        py::arg("graph"), py::arg("k"), py::arg("debug_invariants") = false);

    m.def(
        "extract_center",
        [](const helly::Graph& g, int c, int k, int r, bool debug) {
            return helly::extract_center(g, c, k, r, debug);
        },
        py::arg("graph"), py::arg("central_vertex"), py::arg("k"), py::arg("radius"),
        py::arg("debug_invariants") = false);

    m.def(
        "helly_check",
        [](const helly::Graph& g, int cap) {
            auto v = helly::helly_check_subsets(g, cap);
            return py::make_tuple(v.helly, v.witness);
        },
        py::arg("graph"), py::arg("cap") = 16);

    m.def(
        "hyperbolicity",
        [](const helly::Graph& g, int cap) {
            auto res = helly::hyperbolicity_exact(g, cap);
            return py::make_tuple(res.two_delta / 2.0, res.witness);
        },
        py::arg("graph"), py::arg("cap") = 150);

    m.def(
        "pseudoconvexity_beta",
        [](const helly::Graph& g, int cap) {
            auto res = helly::pseudoconvexity_beta(g, cap);
            py::object w = py::none();
            if (res.witness)
                w = py::make_tuple(res.witness->v, res.witness->r, res.witness->x, res.witness->y,
                                   res.witness->z);
            return py::make_tuple(res.beta, w);
        },
        py::arg("graph"), py::arg("cap") = 40);

    m.def(
        "kappa",
        [](const helly::Graph& g, int cap) {
            auto res = helly::kappa_exact(g, cap);
            return py::make_tuple(res.kappa, res.witness_m);
        },
        py::arg("graph"), py::arg("cap") = 14);
}
