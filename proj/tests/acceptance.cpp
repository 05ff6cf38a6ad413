// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "graphdyn/dynamics.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/metrics.hpp"
#include "graphdyn/trace_io.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace graphdyn;

namespace {

std::string data(const std::string& name) { return std::string(GRAPHDYN_TEST_DATA) + "/" + name; }

Trace load(const std::string& name, const BinningPolicy& policy = BinningPolicy::window(1)) {
    std::ifstream in(data(name));
    return parse_temporal_edge_list(in, policy);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

Outcome c1_ged_oracle() {
    Outcome o;
    Rng rng = make_stream(1001);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 9);
        const Snapshot a = oracle::random_graph(n, uniform_unit(rng), rng);
        Snapshot b = a;
        if (n <= 6) {
            b = oracle::random_graph(n, uniform_unit(rng), rng);
        } else {
            // Larger state spaces: stay within a few toggles so the search terminates quickly.
            const std::size_t flips = 1 + uniform_below(rng, 6);
            std::vector<IndexPair> pairs;
            for (std::size_t f = 0; f < flips; ++f) pairs.push_back(pair_from_rank(uniform_below(rng, pair_count(n)), n));
            for (const IndexPair& p : pairs) b = b.toggled(std::vector<IndexPair>{p});
        }
        const std::uint64_t got = ged(a, b);
        const std::size_t want = oracle::edit_distance_search(a, b);
        if (got != want) o.fail("trial " + std::to_string(trial) + ": " + std::to_string(got) + " vs " + std::to_string(want));
    }
    if (o.pass) o.detail = "200 pairs, exact";
    return o;
}

Outcome c2_example() {
    Outcome o;
    const Trace trace = align_universe({load("line5.tsv")[0], load("cycle5.tsv")[0], load("chord5.tsv")[0]});
    const Snapshot& line = trace[0];
    const Snapshot& cycle = trace[1];
    const Snapshot& chord = trace[2];
    if (ged(line, cycle) != 1) o.fail("ged(line, cycle) != 1");
    if (ged(line, chord) != 1) o.fail("ged(line, chord) != 1");
    const double to_chord = centrality_distance(CentralityKind::CC, line, chord);
    const double to_cycle = centrality_distance(CentralityKind::CC, line, cycle);
    if (std::abs(to_chord - 1.125) > 1e-9) o.fail("d_CC(line, chord) = " + fmt("%.12f", to_chord));
    if (std::abs(to_cycle - 1.375) > 1e-9) o.fail("d_CC(line, cycle) = " + fmt("%.12f", to_cycle));
    if (!(to_chord < to_cycle)) o.fail("chord not closer than cycle");
    if (o.pass) o.detail = "ged 1/1, d_CC " + fmt("%.9f", to_chord) + " < " + fmt("%.9f", to_cycle);
    return o;
}

Outcome c3_betweenness() {
    Outcome o;
    std::size_t labeled = 0;
    std::set<std::pair<std::size_t, std::uint64_t>> classes;
    double worst = 0;
    auto check = [&](const Snapshot& g) {
        const auto ref = oracle::betweenness(g);
        const CentralityVector got = betweenness_centrality(g);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) worst = std::max(worst, std::abs(got[v] - ref[v]));
    };
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            const Snapshot g = oracle::graph_from_mask(n, mask);
            classes.emplace(n, oracle::canonical_mask(g));
            check(g);
            ++labeled;
        }
    }
    Rng rng = make_stream(1003);
    for (int i = 0; i < 100; ++i) check(oracle::random_graph(6, uniform_unit(rng), rng));
    if (classes.size() != 52) o.fail("expected 52 isomorphism classes, found " + std::to_string(classes.size()));
    if (worst > 1e-9) o.fail("max deviation " + fmt("%.3g", worst));
    if (o.pass) {
        o.detail = std::to_string(labeled) + " labeled graphs (" + std::to_string(classes.size()) +
                   " classes) + 100 on 6 vertices, max deviation " + fmt("%.3g", worst);
    }
    return o;
}

Snapshot random_connected(std::size_t n, double extra, Rng& rng) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = VertexId{i};
    std::vector<Edge> es;
    for (std::uint64_t v = 1; v < n; ++v) es.push_back({VertexId{uniform_below(rng, v)}, VertexId{v}});
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            if (uniform_unit(rng) < extra) es.push_back({VertexId{i}, VertexId{j}});
        }
    }
    return Snapshot(ids, es);
}

Outcome c4_pagerank() {
    Outcome o;
    double worst_cycle = 0;
    for (std::size_t n = 3; n <= 50; ++n) {
        std::vector<VertexId> ids(n);
        std::vector<Edge> es;
        for (std::size_t i = 0; i < n; ++i) {
            ids[i] = VertexId{i};
            es.push_back(make_edge(VertexId{i}, VertexId{(i + 1) % n}));
        }
        const CentralityVector pr = pagerank_centrality(Snapshot(ids, es));
        for (double v : pr.values()) worst_cycle = std::max(worst_cycle, std::abs(v - 1.0 / double(n)));
    }
    double worst_sum = 0;
    Rng rng = make_stream(1004);
    for (int i = 0; i < 100; ++i) {
        const Snapshot g = random_connected(2 + uniform_below(rng, 60), 0.1 * uniform_unit(rng), rng);
        const CentralityVector pr = pagerank_centrality(g);
        worst_sum = std::max(worst_sum, std::abs(std::accumulate(pr.values().begin(), pr.values().end(), 0.0) - 1.0));
    }
    if (worst_cycle > 1e-8) o.fail("cycle deviation " + fmt("%.3g", worst_cycle));
    if (worst_sum > 1e-8) o.fail("sum deviation " + fmt("%.3g", worst_sum));
    if (o.pass) o.detail = "cycle deviation " + fmt("%.3g", worst_cycle) + ", sum deviation " + fmt("%.3g", worst_sum);
    return o;
}

Outcome c5_sampler() {
    Outcome o;
    Rng rng = make_stream(1005);
    std::size_t failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + uniform_below(rng, 29);
        const Snapshot g = oracle::random_graph(n, uniform_unit(rng), rng);
        const std::uint64_t radius = uniform_below(rng, pair_count(n) + 1);
        if (ged(g, sample_uniform(g, radius, rng)) != radius) ++failures;
    }
    std::size_t dp_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + uniform_below(rng, 29);
        const Snapshot g_t = oracle::random_graph(n, uniform_unit(rng), rng);
        const Snapshot g_next = oracle::random_graph(n, uniform_unit(rng), rng);
        const Snapshot h = sample_degree_preserving(g_t, g_next, rng);
        if (ged(g_t, h) != ged(g_t, g_next) || h.edge_count() != g_next.edge_count()) ++dp_failures;
    }
    if (failures) o.fail(std::to_string(failures) + " uniform failures");
    if (dp_failures) o.fail(std::to_string(dp_failures) + " degree-preserving failures");
    if (o.pass) o.detail = "1000 + 1000 draws, 0 failures";
    return o;
}

/// 30 vertices, 200 transitions, each toggling 5 uniformly random pairs.
Trace null_trace() {
    Rng rng = make_stream(1006);
    std::vector<Snapshot> snaps{oracle::random_graph(30, 0.15, rng)};
    for (int t = 0; t < 200; ++t) snaps.push_back(sample_uniform(snaps.back(), 5, rng));
    return Trace(std::move(snaps));
}

DynamicSignature null_signature(const Trace& trace, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.k = 100;
    cfg.seed = seed;
    return signature(trace, kAllCentralities, cfg, {}, "null");
}

std::string describe(const DynamicSignature& sig) {
    std::string s;
    for (const auto& e : sig.entries) s += std::string(s.empty() ? "" : " ") + std::string(to_string(e.centrality)) + "=" + fmt("%.3f", e.p);
    return s;
}

Outcome check_band(const DynamicSignature& sig) {
    Outcome o;
    for (const auto& e : sig.entries) {
        if (e.transitions_considered != 200) o.fail(std::string(to_string(e.centrality)) + " considered " + std::to_string(e.transitions_considered));
        if (e.p < 0.0 || e.p > 0.15) o.fail(std::string(to_string(e.centrality)) + " p=" + fmt("%.3f", e.p));
    }
    return o;
}

Outcome c6_null_calibration(const DynamicSignature& sig) {
    Outcome o = check_band(sig);
    o.detail = (o.pass ? "" : o.detail + "; ") + describe(sig);
    return o;
}

Outcome c7_synthetic() {
    Outcome o;
    constexpr std::uint64_t kSeeds = 5;
    const GeneratorModel models[] = {GeneratorModel::ER, GeneratorModel::BA, GeneratorModel::CMHALF};
    double mean_p[3][kSeeds] = {};
    double per_kind[3][6] = {};
    std::size_t er_smallest = 0;
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
        for (std::size_t mi = 0; mi < 3; ++mi) {
            GeneratorConfig gen;
            gen.model = models[mi];
            gen.n = models[mi] == GeneratorModel::ER ? 100 : 152;
            gen.m = 1;
            gen.steps = 150;
            gen.seed = 7000 + seed;
            const Trace trace = generate(gen);
            SamplerConfig cfg;
            cfg.k = 100;
            cfg.seed = 8000 + seed;
            const DynamicSignature sig = signature(trace, kAllCentralities, cfg);
            for (std::size_t ki = 0; ki < 6; ++ki) {
                per_kind[mi][ki] += sig.entries[ki].p / kSeeds;
                mean_p[mi][seed] += sig.entries[ki].p / 6.0;
            }
        }
        if (mean_p[0][seed] < mean_p[1][seed] && mean_p[0][seed] < mean_p[2][seed]) ++er_smallest;
    }
    std::string detail;
    for (std::size_t mi = 0; mi < 3; ++mi) {
        detail += std::string(mi ? "; " : "") + std::string(to_string(models[mi])) + ":";
        for (std::size_t ki = 0; ki < 6; ++ki) {
            detail += " " + std::string(to_string(kAllCentralities[ki])) + "=" + fmt("%.3f", per_kind[mi][ki]);
            if (per_kind[mi][ki] > 0.35) o.fail("mean p above 0.35");
        }
    }
    detail += "; ER smallest in " + std::to_string(er_smallest) + "/5 seeds";
    if (er_smallest < 4) o.fail("ER not smallest often enough");
    o.detail = o.pass ? detail : o.detail + "; " + detail;
    return o;
}

std::string export_text(const std::function<void(std::ostream&)>& write) {
    std::ostringstream out;
    write(out);
    return out.str();
}

Outcome c8_determinism(const Trace& null, const DynamicSignature& first) {
    Outcome o;
    const Trace toy = load("toy.tsv");
    SamplerConfig cfg;
    cfg.seed = 42;
    for (ExportFormat format : {ExportFormat::Csv, ExportFormat::Json}) {
        auto sig_bytes = [&] {
            return export_text([&](std::ostream& out) { export_signature(signature(toy, kAllCentralities, cfg, {}, "toy"), out, format); });
        };
        auto chrono_bytes = [&] {
            return export_text([&](std::ostream& out) { export_chronogram(analyze_trace(toy, CentralityKind::PC, cfg), out, format); });
        };
        if (sig_bytes() != sig_bytes()) o.fail("signature export differs between runs");
        if (chrono_bytes() != chrono_bytes()) o.fail("chronogram export differs between runs");
    }
    SamplerConfig other = cfg;
    other.seed = 43;
    if (analyze_trace(toy, CentralityKind::BC, cfg)[0].sample_distances ==
        analyze_trace(toy, CentralityKind::BC, other)[0].sample_distances) {
        o.fail("changing the seed left sample_distances unchanged");
    }
    const DynamicSignature reseeded = null_signature(null, 2);
    const Outcome band = check_band(reseeded);
    if (!band.pass) o.fail("reseeded null trace out of band: " + band.detail);
    if (reseeded == first) o.fail("reseeded signature identical");
    const std::string summary = "byte-identical reruns; reseeded null " + describe(reseeded);
    o.detail = o.pass ? summary : o.detail + "; " + summary;
    return o;
}

Outcome c9_golden() {
    Outcome o;
    const Trace toy = load("toy.tsv");
    SamplerConfig cfg;
    cfg.seed = 7;
    cfg.k = 100;
    const std::string chrono = export_text([&](std::ostream& out) {
        export_chronogram(analyze_trace(toy, CentralityKind::CC, cfg), out, ExportFormat::Csv);
    });
    const std::string sig = export_text([&](std::ostream& out) {
        export_signature(signature(toy, kAllCentralities, cfg, {}, "toy"), out, ExportFormat::Csv);
    });
    if (chrono != read_file(data("golden_chronogram.csv"))) o.fail("chronogram CSV differs from golden_chronogram.csv");
    if (sig != read_file(data("golden_signature.csv"))) o.fail("signature CSV differs from golden_signature.csv");
    if (o.pass) o.detail = "both CSV exports byte-identical";
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char* title, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("[%s] criterion %d: %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
        std::fflush(stdout);
    };

    report(1, "ged matches toggle search", c1_ged_oracle);
    report(2, "line, cycle and chord distances", c2_example);
    report(3, "betweenness matches path enumeration", c3_betweenness);
    report(4, "pagerank normalization", c4_pagerank);
    report(5, "sampler exactness", c5_sampler);
    const Trace null = null_trace();
    DynamicSignature null_sig;
    report(6, "null calibration", [&] {
        null_sig = null_signature(null, 1);
        return c6_null_calibration(null_sig);
    });
    report(7, "synthetic signatures are low", c7_synthetic);
    report(8, "determinism", [&] { return c8_determinism(null, null_sig); });
    report(9, "golden exports", c9_golden);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
