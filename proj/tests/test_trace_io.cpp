#include "graphdyn/error.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/trace_io.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace graphdyn;

namespace {

std::vector<Edge> edges(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> raw) {
    std::vector<Edge> out;
    for (auto [a, b] : raw) out.push_back(make_edge(VertexId{a}, VertexId{b}));
    return out;
}

Trace parse(const std::string& text, const BinningPolicy& policy) {
    std::istringstream in(text);
    return parse_temporal_edge_list(in, policy);
}

TransitionAnalysis analysis(std::size_t t, std::uint64_t radius, double measured, std::vector<double> samples) {
    TransitionAnalysis a;
    a.t = t;
    a.radius = radius;
    a.centrality = CentralityKind::CC;
    a.measured = measured;
    a.sample_distances = std::move(samples);
    const SampleMoments m = moments(a.sample_distances);
    a.mean = m.mean;
    a.std_dev = m.std_dev;
    a.outlier = is_outlier(measured, a.sample_distances);
    return a;
}

}  // namespace

TEST_CASE("window binning") {
    const Trace t = parse("0 1 2\n0 2 3\n5 1 3\n", BinningPolicy::window(5));
    REQUIRE(t.size() == 2);
    CHECK(t[0].edges() == edges({{1, 2}, {2, 3}}));
    CHECK(t[1].edges() == edges({{1, 3}}));
    CHECK(t.universe() == std::vector<VertexId>{VertexId{1}, VertexId{2}, VertexId{3}});
    CHECK(std::vector<std::int64_t>(t.timestamps().begin(), t.timestamps().end()) == std::vector<std::int64_t>{0, 5});

    SUBCASE("empty bins in between stay") {
        const Trace gap = parse("0 1 2\n7 2 3\n", BinningPolicy::window(2));
        REQUIRE(gap.size() == 4);
        CHECK(gap[1].edge_count() == 0);
        CHECK(gap[2].edge_count() == 0);
    }
    SUBCASE("unsorted input and duplicates") {
        const Trace u = parse("5 1 3\n0 2 3\n0 3 2\n0 1 2\n", BinningPolicy::window(5));
        CHECK(u[0].edges() == edges({{1, 2}, {2, 3}}));
        CHECK(u[1].edges() == edges({{1, 3}}));
    }
}

TEST_CASE("cumulative binning") {
    const Trace t = parse("0 1 2\n0 2 3\n5 1 3\n", BinningPolicy::cumulative());
    REQUIRE(t.size() == 2);
    CHECK(t[0].edges() == edges({{1, 2}, {2, 3}}));
    CHECK(t[1].edges() == edges({{1, 2}, {1, 3}, {2, 3}}));

    const Trace w = parse("0 1 2\n1 2 3\n5 1 3\n", BinningPolicy::cumulative(2));
    REQUIRE(w.size() == 3);
    CHECK(w[0].edge_count() == 2);
    CHECK(w[1].edge_count() == 2);
    CHECK(w[2].edge_count() == 3);
}

TEST_CASE("parse errors") {
    SUBCASE("bad timestamp names the line") {
        try {
            (void)parse("abc 1 2\n", BinningPolicy::window(1));
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("line numbers count comments") {
        try {
            (void)parse("# header\n0 1 2\n\n0 1\n", BinningPolicy::window(1));
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
        }
    }
    CHECK_THROWS_AS((void)parse("0 1 1\n", BinningPolicy::window(1)), ParseError);
    CHECK_THROWS_AS((void)parse("-1 1 2\n", BinningPolicy::window(1)), ParseError);
    CHECK_THROWS_AS((void)parse("0 1 2 3\n", BinningPolicy::window(1)), ParseError);
    CHECK_THROWS_AS((void)parse("# nothing\n\n", BinningPolicy::window(1)), DataError);
    CHECK_THROWS_AS((void)parse("0 1 2\n", BinningPolicy::window(0)), std::invalid_argument);
}

TEST_CASE("property: binning keeps every endpoint in the universe") {
    Rng rng = make_stream(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::ostringstream text;
        std::set<std::uint64_t> endpoints;
        const std::size_t lines = 1 + uniform_below(rng, 30);
        for (std::size_t i = 0; i < lines; ++i) {
            const std::uint64_t u = uniform_below(rng, 20);
            const std::uint64_t v = (u + 1 + uniform_below(rng, 19)) % 20;
            endpoints.insert(u);
            endpoints.insert(v);
            text << uniform_below(rng, 50) << ' ' << u << ' ' << v << '\n';
        }
        const BinningPolicy policy = trial % 2 ? BinningPolicy::window(1 + std::int64_t(uniform_below(rng, 10)))
                                               : BinningPolicy::cumulative(std::int64_t(uniform_below(rng, 5)));
        const Trace t = parse(text.str(), policy);
        REQUIRE(t.universe().size() == endpoints.size());
        for (const VertexId& v : t.universe()) REQUIRE(endpoints.contains(v.value));
        if (policy.mode == BinningMode::Cumulative) {
            for (std::size_t i = 0; i + 1 < t.size(); ++i) {
                for (const Edge& e : t[i].edges()) REQUIRE(t[i + 1].has_edge(e.u, e.v));
            }
        }
    }
}

TEST_CASE("edge-list round trip") {
    GeneratorConfig cfg;
    cfg.model = GeneratorModel::BA;
    cfg.n = 20;
    cfg.seed = 3;
    const Trace trace = generate(cfg);
    std::stringstream buffer;
    write_edge_list(trace, buffer, "model=BA");
    CHECK(buffer.str().rfind("# model=BA\n", 0) == 0);
    const Trace back = parse_temporal_edge_list(buffer, BinningPolicy::window(1));
    REQUIRE(back.size() == trace.size());
    for (std::size_t t = 0; t < trace.size(); ++t) CHECK(back[t].edges() == trace[t].edges());
}

TEST_CASE("chronogram csv") {
    const std::vector<TransitionAnalysis> one{analysis(3, 2, 1.0, {2, 2, 2})};
    std::ostringstream out;
    export_chronogram(one, out, ExportFormat::Csv);
    CHECK(out.str() ==
          "t,radius,measured,sample_median,sample_mean,sample_sd,lower2s,upper2s,outlier\n"
          "3,2,1.000000000,2.000000000,2.000000000,0.000000000,2.000000000,2.000000000,true\n");

    std::ostringstream ignored;
    CHECK_THROWS_AS(export_chronogram({}, ignored, ExportFormat::Csv), DataError);
    std::vector<TransitionAnalysis> mixed{one[0], one[0]};
    mixed[1].centrality = CentralityKind::DC;
    CHECK_THROWS_AS(export_chronogram(mixed, ignored, ExportFormat::Json), DataError);
}

TEST_CASE("chronogram json round trip") {
    const std::vector<TransitionAnalysis> list{analysis(0, 1, 0.1 + 0.2, {1.0 / 3.0, 2.5, 1e-17}),
                                               analysis(4, 7, 12.75, {3, 4, 5, 6})};
    std::stringstream buffer;
    export_chronogram(list, buffer, ExportFormat::Json);
    CHECK(parse_chronogram_json(buffer) == list);

    std::istringstream junk("{\"centrality\": 3}");
    CHECK_THROWS_AS((void)parse_chronogram_json(junk), DataError);
}

TEST_CASE("signature export") {
    DynamicSignature sig;
    sig.trace_name = "toy";
    sig.entries.push_back({CentralityKind::DC, 0.5, 1, 2});
    std::ostringstream csv;
    export_signature(sig, csv, ExportFormat::Csv);
    CHECK(csv.str() == "trace,centrality,p,transitions\ntoy,DC,0.500000000,2\n");

    SUBCASE("json round trip with all six kinds") {
        DynamicSignature full;
        full.trace_name = "a \"quoted\", name";
        for (CentralityKind k : kAllCentralities) full.entries.push_back({k, 1.0 / 7.0, 1, 7});
        std::stringstream buffer;
        export_signature(full, buffer, ExportFormat::Json);
        CHECK(buffer.str().find("null_reference_p") != std::string::npos);
        CHECK(parse_signature_json(buffer) == full);

        std::ostringstream rows;
        export_signature(full, rows, ExportFormat::Csv);
        const std::string text = rows.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 7);
        CHECK(text.find("\"a \"\"quoted\"\", name\",DC,") != std::string::npos);
    }
}

TEST_CASE("format helpers") {
    CHECK(format_decimal(0.0) == "0.000000000");
    CHECK(format_decimal(1.125) == "1.125000000");
    CHECK(format_decimal(2.0 / 3.0) == "0.666666667");
    CHECK(parse_export_format("json") == ExportFormat::Json);
    CHECK_FALSE(parse_export_format("xml").has_value());
}
