#include "graphdyn/dynamics.hpp"
#include "graphdyn/error.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/metrics.hpp"
#include "graphdyn/trace_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace graphdyn;

namespace {

CentralityKind kind_of(const std::string& name) {
    auto k = parse_centrality(name);
    if (!k) throw py::value_error("unknown centrality '" + name + "'");
    return *k;
}

std::vector<CentralityKind> kinds_of(const std::vector<std::string>& names) {
    if (names.empty()) return {kAllCentralities.begin(), kAllCentralities.end()};
    std::vector<CentralityKind> out;
    for (const auto& n : names) out.push_back(kind_of(n));
    return out;
}

Snapshot make_snapshot(const std::vector<std::uint64_t>& vertices,
                       const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    std::vector<VertexId> ids;
    for (auto v : vertices) ids.push_back(VertexId{v});
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.push_back(make_edge(VertexId{u}, VertexId{v}));
    return Snapshot(std::move(ids), std::move(es));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_pairs(const Snapshot& g) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u.value, e.v.value);
    return out;
}

std::vector<std::uint64_t> vertex_ids(const Snapshot& g) {
    std::vector<std::uint64_t> out;
    for (VertexId v : g.universe()) out.push_back(v.value);
    return out;
}

SamplerConfig sampler(std::size_t k, std::uint64_t seed, const std::string& null_model, unsigned threads) {
    SamplerConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    auto nm = parse_null_model(null_model);
    if (!nm) throw py::value_error("unknown null model '" + null_model + "'");
    cfg.null_model = *nm;
    cfg.threads = threads;
    return cfg;
}

PagerankConfig pagerank(double alpha) {
    PagerankConfig cfg;
    cfg.damping = alpha;
    return cfg;
}

py::dict to_dict(const TransitionAnalysis& a) {
    py::dict d;
    d["t"] = a.t;
    d["radius"] = a.radius;
    d["centrality"] = std::string(to_string(a.centrality));
    d["measured"] = a.measured;
    d["sample_distances"] = a.sample_distances;
    d["sample_median"] = a.median();
    d["sample_mean"] = a.mean;
    d["sample_sd"] = a.std_dev;
    d["lower2s"] = a.lower2s();
    d["upper2s"] = a.upper2s();
    d["outlier"] = a.outlier;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Centrality distances and dynamic signatures of temporal graphs";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<Snapshot>(m, "Snapshot")
        .def(py::init(&make_snapshot), py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &vertex_ids)
        .def_property_readonly("edges", &edge_pairs)
        .def("vertex_count", &Snapshot::vertex_count)
        .def("edge_count", &Snapshot::edge_count)
        .def("neighbors", [](const Snapshot& g, std::uint64_t v) {
            std::vector<std::uint64_t> out;
            for (VertexId w : g.neighbors(VertexId{v})) out.push_back(w.value);
            return out;
        })
        .def("__eq__", [](const Snapshot& a, const Snapshot& b) { return a == b; })
        .def("__repr__", [](const Snapshot& g) {
            return "<Snapshot vertices=" + std::to_string(g.vertex_count()) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<Trace>(m, "Trace")
        .def(py::init([](std::vector<Snapshot> snaps) { return align_universe(std::move(snaps)); }),
             py::arg("snapshots"))
        .def("__len__", &Trace::size)
        .def("__getitem__", [](const Trace& t, std::size_t i) {
            if (i >= t.size()) throw py::index_error();
            return t[i];
        })
        .def_property_readonly("timestamps", [](const Trace& t) {
            return std::vector<std::int64_t>(t.timestamps().begin(), t.timestamps().end());
        });

    m.def("centrality", [](const std::string& kind, const Snapshot& g, double alpha) {
        const CentralityVector c = centrality(kind_of(kind), g, pagerank(alpha));
        return std::vector<double>(c.values().begin(), c.values().end());
    }, py::arg("kind"), py::arg("snapshot"), py::arg("alpha") = 0.85);

    m.def("ged", &ged, py::arg("a"), py::arg("b"));

    m.def("centrality_distance", [](const std::string& kind, const Snapshot& a, const Snapshot& b, double alpha) {
        return centrality_distance(kind_of(kind), a, b, pagerank(alpha));
    }, py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("alpha") = 0.85);

    m.def("parse_edge_list", [](const std::string& text, std::int64_t window, bool cumulative) {
        std::istringstream in(text);
        const BinningPolicy policy = cumulative ? BinningPolicy::cumulative(window) : BinningPolicy::window(window);
        return parse_temporal_edge_list(in, policy);
    }, py::arg("text"), py::arg("window") = 1, py::arg("cumulative") = false,
       "Trace from `timestamp u v` lines. With cumulative=True a window of 0 bins by distinct timestamps.");

    m.def("generate", [](const std::string& model, std::size_t n, std::size_t d, std::size_t m_edges,
                         std::optional<std::size_t> steps, std::uint64_t seed) {
        GeneratorConfig cfg;
        auto gm = parse_generator_model(model);
        if (!gm) throw py::value_error("unknown model '" + model + "'");
        cfg.model = *gm;
        cfg.n = n;
        cfg.d = d;
        cfg.m = m_edges;
        cfg.steps = steps;
        cfg.seed = seed;
        return generate(cfg);
    }, py::arg("model"), py::arg("n"), py::arg("d") = 0, py::arg("m") = 1, py::arg("steps") = py::none(),
       py::arg("seed") = 0);

    m.def("chronogram", [](const Trace& trace, const std::string& kind, std::size_t k, std::uint64_t seed,
                           const std::string& null_model, double alpha, unsigned threads) {
        py::list out;
        for (const auto& a : analyze_trace(trace, kind_of(kind), sampler(k, seed, null_model, threads), pagerank(alpha))) {
            out.append(to_dict(a));
        }
        return out;
    }, py::arg("trace"), py::arg("kind"), py::arg("k") = 100, py::arg("seed") = 0,
       py::arg("null_model") = "uniform", py::arg("alpha") = 0.85, py::arg("threads") = 0);

    m.def("signature", [](const Trace& trace, const std::vector<std::string>& kinds, std::size_t k,
                          std::uint64_t seed, const std::string& null_model, double alpha, unsigned threads) {
        const auto list = kinds_of(kinds);
        const DynamicSignature sig = signature(trace, list, sampler(k, seed, null_model, threads), pagerank(alpha));
        py::dict out;
        for (const auto& e : sig.entries) out[py::str(std::string(to_string(e.centrality)))] = e.p;
        return out;
    }, py::arg("trace"), py::arg("kinds") = std::vector<std::string>{}, py::arg("k") = 100, py::arg("seed") = 0,
       py::arg("null_model") = "uniform", py::arg("alpha") = 0.85, py::arg("threads") = 0,
       "Outlier fraction per centrality kind.");
}
