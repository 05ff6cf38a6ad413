#include "cli.hpp"

#include "graphdyn/centrality.hpp"
#include "graphdyn/dynamics.hpp"
#include "graphdyn/error.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/metrics.hpp"
#include "graphdyn/trace_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace graphdyn::cli {

namespace {

/// Raised for flag combinations CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> inputs;
    std::string format = "csv";
    std::uint64_t seed = 0;
    std::size_t k = 100;
    std::string null_model = "uniform";
    std::vector<std::string> centralities;
    std::int64_t bin_window = 0;
    bool cumulative = false;
    std::string output;
    double alpha = 0.85;
    unsigned threads = 0;

    std::size_t snapshot = 0;
    std::size_t from = 0;
    std::size_t to = 1;

    std::string model;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t m = 1;
    std::size_t steps = 0;
    std::string name;
};

/// Settings derived from Options once every flag is validated.
struct Resolved {
    ExportFormat format = ExportFormat::Csv;
    std::vector<CentralityKind> kinds;
    BinningPolicy policy;
    SamplerConfig sampler;
    PagerankConfig pagerank;
};

void add_common(CLI::App& sub, Options& o) {
    sub.add_option("--input", o.inputs, "Temporal edge list (timestamp u v per line)");
    sub.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--seed", o.seed, "Random seed; a fresh one is printed if omitted");
    sub.add_option("--k", o.k, "Null-model samples per transition");
    sub.add_option("--null-model", o.null_model, "Null model")->check(CLI::IsMember({"uniform", "degree"}));
    sub.add_option("--centralities", o.centralities, "Comma-separated centralities (default all six)")
        ->delimiter(',');
    sub.add_option("--bin-window", o.bin_window, "Snapshot window width");
    sub.add_flag("--cumulative", o.cumulative, "Accumulate edges across snapshots");
    sub.add_option("--output", o.output, "Output path (default standard output)");
    sub.add_option("--alpha", o.alpha, "Pagerank damping factor");
    sub.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

Resolved resolve(const Options& o, const CLI::App& sub) {
    Resolved r;
    r.format = *parse_export_format(o.format);
    if (o.centralities.empty()) {
        r.kinds.assign(kAllCentralities.begin(), kAllCentralities.end());
    } else {
        for (const auto& name : o.centralities) {
            auto kind = parse_centrality(name);
            if (!kind) throw UsageError("unknown centrality '" + name + "'");
            r.kinds.push_back(*kind);
        }
    }
    const bool has_window = sub.count("--bin-window") > 0;
    r.policy = o.cumulative ? BinningPolicy::cumulative(has_window ? o.bin_window : 0)
                            : BinningPolicy::window(has_window ? o.bin_window : 1);
    r.policy.validate();
    r.sampler.k = o.k;
    r.sampler.seed = o.seed;
    r.sampler.null_model = *parse_null_model(o.null_model);
    r.sampler.threads = o.threads;
    r.sampler.validate();
    r.pagerank.damping = o.alpha;
    r.pagerank.validate();
    return r;
}

Trace load_trace(const std::string& path, const BinningPolicy& policy) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return parse_temporal_edge_list(in, policy);
}

const Snapshot& pick(const Trace& trace, std::size_t index, const std::string& what) {
    if (index >= trace.size()) {
        throw DataError(what + " index " + std::to_string(index) + " out of range (trace has " +
                        std::to_string(trace.size()) + " snapshots)");
    }
    return trace[index];
}

/// The two snapshots compared by `ged` / `distance`, aligned.
std::pair<Snapshot, Snapshot> load_pair(const Options& o, const Resolved& r) {
    if (o.inputs.size() == 2) {
        const Trace a = load_trace(o.inputs[0], r.policy);
        const Trace b = load_trace(o.inputs[1], r.policy);
        const Trace both = align_universe({pick(a, o.snapshot, "snapshot"), pick(b, o.snapshot, "snapshot")});
        return {both[0], both[1]};
    }
    const Trace trace = load_trace(o.inputs.front(), r.policy);
    return {pick(trace, o.from, "--from"), pick(trace, o.to, "--to")};
}

void require_inputs(const Options& o, std::size_t min, std::size_t max) {
    if (o.inputs.size() < min || o.inputs.size() > max) {
        throw UsageError(min == max ? "expected exactly " + std::to_string(min) + " --input"
                                    : "expected " + std::to_string(min) + " to " + std::to_string(max) +
                                          " --input flags");
    }
}

void cmd_centrality(const Options& o, const Resolved& r, std::ostream& out) {
    const Trace trace = load_trace(o.inputs.front(), r.policy);
    const Snapshot& g = pick(trace, o.snapshot, "snapshot");
    std::vector<CentralityVector> vectors;
    for (CentralityKind k : r.kinds) vectors.push_back(centrality(k, g, r.pagerank));

    if (r.format == ExportFormat::Csv) {
        out << "vertex";
        for (CentralityKind k : r.kinds) out << ',' << to_string(k);
        out << '\n';
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            out << g.vertex_at(v).value;
            for (const auto& c : vectors) out << ',' << format_decimal(c[v]);
            out << '\n';
        }
    } else {
        nlohmann::json doc;
        std::vector<std::uint64_t> ids;
        for (VertexId id : g.universe()) ids.push_back(id.value);
        doc["vertices"] = ids;
        for (const auto& c : vectors) {
            doc["centralities"][std::string(to_string(c.kind()))] =
                std::vector<double>(c.values().begin(), c.values().end());
        }
        out << doc.dump(2) << '\n';
    }
}

void cmd_ged(const Options& o, const Resolved& r, std::ostream& out) {
    const auto [a, b] = load_pair(o, r);
    const std::uint64_t d = ged(a, b);
    if (r.format == ExportFormat::Csv) {
        out << d << '\n';
    } else {
        out << nlohmann::json{{"ged", d}}.dump(2) << '\n';
    }
}

void cmd_distance(const Options& o, const Resolved& r, std::ostream& out) {
    const auto [a, b] = load_pair(o, r);
    if (r.format == ExportFormat::Csv) {
        out << "centrality,distance\n";
        for (CentralityKind k : r.kinds) {
            out << to_string(k) << ',' << format_decimal(centrality_distance(k, a, b, r.pagerank)) << '\n';
        }
    } else {
        nlohmann::json doc;
        doc["ged"] = ged(a, b);
        for (CentralityKind k : r.kinds) {
            doc["distances"][std::string(to_string(k))] = centrality_distance(k, a, b, r.pagerank);
        }
        out << doc.dump(2) << '\n';
    }
}

void cmd_generate(const Options& o, const CLI::App& sub, std::ostream& out) {
    GeneratorConfig cfg;
    auto model = parse_generator_model(o.model);
    if (!model) throw UsageError("unknown model '" + o.model + "'");
    cfg.model = *model;
    cfg.n = o.n;
    cfg.d = o.d;
    cfg.m = o.m;
    if (sub.count("--steps") > 0) cfg.steps = o.steps;
    cfg.seed = o.seed;
    cfg.validate();
    const Trace trace = generate(cfg);

    std::ostringstream header;
    header << "model=" << to_string(cfg.model) << " n=" << cfg.n;
    if (cfg.model == GeneratorModel::RR) header << " d=" << cfg.d;
    if (cfg.model == GeneratorModel::BA) header << " m=" << cfg.m;
    header << " seed=" << cfg.seed << " snapshots=" << trace.size() << " vertices=" << trace.universe().size();
    write_edge_list(trace, out, header.str());
}

void cmd_chronogram(const Options& o, const Resolved& r, std::ostream& out) {
    if (r.kinds.size() != 1) throw UsageError("chronogram needs exactly one centrality (--centralities)");
    const Trace trace = load_trace(o.inputs.front(), r.policy);
    const auto analyses = analyze_trace(trace, r.kinds.front(), r.sampler, r.pagerank);
    export_chronogram(analyses, out, r.format);
}

void cmd_signature(const Options& o, const Resolved& r, std::ostream& out) {
    const Trace trace = load_trace(o.inputs.front(), r.policy);
    const std::string name = o.name.empty() ? std::filesystem::path(o.inputs.front()).stem().string() : o.name;
    const auto sig = signature(trace, r.kinds, r.sampler, r.pagerank, name);
    export_signature(sig, out, r.format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Centrality distances and dynamic signatures of temporal graphs", "graphdyn"};
    app.require_subcommand(1);

    Options o;
    auto* centrality_cmd = app.add_subcommand("centrality", "Per-vertex centralities of one snapshot");
    auto* distance_cmd = app.add_subcommand("distance", "Centrality distances between two snapshots");
    auto* ged_cmd = app.add_subcommand("ged", "Graph edit distance between two snapshots");
    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic trace as an edge list");
    auto* chronogram_cmd = app.add_subcommand("chronogram", "Per-transition null-model comparison");
    auto* signature_cmd = app.add_subcommand("signature", "Outlier fraction per centrality");

    for (CLI::App* sub : {centrality_cmd, distance_cmd, ged_cmd, generate_cmd, chronogram_cmd, signature_cmd}) {
        add_common(*sub, o);
    }
    centrality_cmd->add_option("--snapshot", o.snapshot, "Snapshot index");
    for (CLI::App* sub : {distance_cmd, ged_cmd}) {
        sub->add_option("--snapshot", o.snapshot, "Snapshot index within each of two inputs");
        sub->add_option("--from", o.from, "First snapshot index (single input)");
        sub->add_option("--to", o.to, "Second snapshot index (single input)");
    }
    generate_cmd->add_option("--model", o.model, "er, rr, ba, cmhalf or cmlog")->required();
    generate_cmd->add_option("--n", o.n, "Vertex count (target count for growth models)")->required();
    generate_cmd->add_option("--d", o.d, "Degree (rr)");
    generate_cmd->add_option("--m", o.m, "Edges per arriving vertex (ba)");
    generate_cmd->add_option("--steps", o.steps, "Number of edge events");
    signature_cmd->add_option("--name", o.name, "Trace name in the output (default input file stem)");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    try {
        const CLI::App& active = *app.get_subcommands().front();
        const Resolved r = resolve(o, active);
        if (!generate_cmd->parsed()) {
            if (distance_cmd->parsed() || ged_cmd->parsed()) {
                require_inputs(o, 1, 2);
            } else {
                require_inputs(o, 1, 1);
            }
        }
        const bool random = generate_cmd->parsed() || chronogram_cmd->parsed() || signature_cmd->parsed();
        if (random && active.count("--seed") == 0) {
            o.seed = std::random_device{}();
            o.seed = (o.seed << 32) ^ std::random_device{}();
            err << "seed: " << o.seed << '\n';
        }
        Resolved seeded = r;
        seeded.sampler.seed = o.seed;

        std::ostream* sink = &out;
        if (!o.output.empty()) {
            file.open(o.output, std::ios::binary);
            if (!file) throw DataError("cannot open " + o.output + " for writing");
            sink = &file;
        }

        if (centrality_cmd->parsed()) cmd_centrality(o, seeded, *sink);
        if (distance_cmd->parsed()) cmd_distance(o, seeded, *sink);
        if (ged_cmd->parsed()) cmd_ged(o, seeded, *sink);
        if (generate_cmd->parsed()) cmd_generate(o, active, *sink);
        if (chronogram_cmd->parsed()) cmd_chronogram(o, seeded, *sink);
        if (signature_cmd->parsed()) cmd_signature(o, seeded, *sink);
        sink->flush();
        if (!*sink) throw DataError("write failure");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace graphdyn::cli
