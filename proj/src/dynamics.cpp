#include "graphdyn/dynamics.hpp"

#include "graphdyn/error.hpp"
#include "graphdyn/metrics.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphdyn {

namespace {

std::uint64_t kind_index(CentralityKind kind) { return static_cast<std::uint64_t>(kind); }

/// Rank of the idx-th absent pair, given the sorted ranks of present edges.
std::uint64_t absent_rank(std::span<const std::uint64_t> present, std::uint64_t idx) {
    std::uint64_t rank = idx;
    for (std::uint64_t e : present) {
        if (e > rank) break;
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> edge_ranks(const Snapshot& g) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(g.edge_count());
    for (const IndexPair& p : g.index_edges()) ranks.push_back(pair_rank(p, g.vertex_count()));
    // index_edges is lexicographic, which is rank order.
    return ranks;
}

Snapshot draw_sample(const Snapshot& g_t, const Snapshot& g_next, std::uint64_t radius,
                     NullModelKind model, Rng& rng) {
    return model == NullModelKind::Uniform ? sample_uniform(g_t, radius, rng)
                                           : sample_degree_preserving(g_t, g_next, rng);
}

/// Shared body of analyze_transition / analyze_trace. `base` is C(g_t).
TransitionAnalysis analyze_with_base(const Snapshot& g_t, const CentralityVector& base, const Snapshot& g_next,
                                     std::uint64_t radius, CentralityKind kind, const SamplerConfig& cfg,
                                     const PagerankConfig& pcfg, std::size_t t, unsigned sample_threads) {
    TransitionAnalysis out;
    out.t = t;
    out.radius = radius;
    out.centrality = kind;
    out.measured = l1_distance(base, centrality(kind, g_next, pcfg));
    out.sample_distances.assign(cfg.k, 0.0);

    detail::parallel_for(cfg.k, sample_threads, [&](std::size_t i) {
        Rng rng = make_stream(cfg.seed, {t, i, kind_index(kind)});
        const Snapshot h = draw_sample(g_t, g_next, radius, cfg.null_model, rng);
        out.sample_distances[i] = l1_distance(base, centrality(kind, h, pcfg));
    });

    const SampleMoments m = moments(out.sample_distances);
    out.mean = m.mean;
    out.std_dev = m.std_dev;
    out.outlier = std::abs(out.measured - m.mean) > 2.0 * m.std_dev;
    return out;
}

struct PendingTransition {
    std::size_t t;
    std::uint64_t radius;
};

std::vector<PendingTransition> changed_transitions(const Trace& trace) {
    std::vector<PendingTransition> out;
    for (std::size_t t = 0; t + 1 < trace.size(); ++t) {
        const std::uint64_t r = ged(trace[t], trace[t + 1]);
        if (r > 0) out.push_back({t, r});
    }
    return out;
}

}  // namespace

std::string_view to_string(NullModelKind kind) {
    return kind == NullModelKind::Uniform ? "uniform" : "degree";
}

std::optional<NullModelKind> parse_null_model(std::string_view text) {
    if (text == "uniform") return NullModelKind::Uniform;
    if (text == "degree") return NullModelKind::DegreePreserving;
    return std::nullopt;
}

void SamplerConfig::validate() const {
    if (k < 2) throw std::invalid_argument("sample count k must be at least 2");
}

double TransitionAnalysis::median() const {
    if (sample_distances.empty()) return 0.0;
    std::vector<double> sorted = sample_distances;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    return sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
}

const SignatureEntry* DynamicSignature::find(CentralityKind kind) const {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const SignatureEntry& e) { return e.centrality == kind; });
    return it == entries.end() ? nullptr : &*it;
}

Snapshot sample_uniform(const Snapshot& g, std::uint64_t radius, Rng& rng) {
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t pairs = pair_count(n);
    if (radius > pairs) {
        throw DataError("radius " + std::to_string(radius) + " exceeds the " + std::to_string(pairs) +
                        " vertex pairs available");
    }
    std::vector<IndexPair> flips;
    flips.reserve(radius);
    for (std::uint64_t rank : sample_distinct(rng, pairs, radius)) {
        flips.push_back(pair_from_rank(rank, n));
    }
    return g.toggled(flips);
}

Snapshot sample_degree_preserving(const Snapshot& g_t, const Snapshot& g_next, Rng& rng) {
    const std::uint64_t radius = ged(g_t, g_next);
    const auto m_t = static_cast<std::int64_t>(g_t.edge_count());
    const auto delta = static_cast<std::int64_t>(g_next.edge_count()) - m_t;
    const auto r = static_cast<std::int64_t>(radius);
    if (r < std::abs(delta) || (r + delta) % 2 != 0) {
        throw DataError("radius and edge-count change are inconsistent");
    }
    const auto additions = static_cast<std::uint64_t>((r + delta) / 2);
    const auto removals = static_cast<std::uint64_t>((r - delta) / 2);

    const std::uint64_t n = g_t.vertex_count();
    const std::uint64_t absent = pair_count(n) - g_t.edge_count();
    if (additions > absent || removals > g_t.edge_count()) {
        throw DataError("not enough vertex pairs to add or edges to remove");
    }

    const auto present = edge_ranks(g_t);
    std::vector<IndexPair> flips;
    flips.reserve(additions + removals);
    for (std::uint64_t idx : sample_distinct(rng, absent, additions)) {
        flips.push_back(pair_from_rank(absent_rank(present, idx), n));
    }
    const auto edges = g_t.index_edges();
    for (std::uint64_t idx : sample_distinct(rng, edges.size(), removals)) {
        flips.push_back(edges[idx]);
    }
    return g_t.toggled(flips);
}

SampleMoments moments(std::span<const double> values) {
    if (values.size() < 2) throw std::invalid_argument("need at least 2 samples");
    const double count = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / count;
    double squares = 0.0;
    for (double v : values) squares += (v - mean) * (v - mean);
    return {mean, std::sqrt(squares / count)};
}

bool is_outlier(double measured, std::span<const double> samples) {
    const SampleMoments m = moments(samples);
    return std::abs(measured - m.mean) > 2.0 * m.std_dev;
}

TransitionAnalysis analyze_transition(const Snapshot& g_t, const Snapshot& g_next, CentralityKind kind,
                                      const SamplerConfig& cfg, const PagerankConfig& pcfg, std::size_t t) {
    cfg.validate();
    const std::uint64_t radius = ged(g_t, g_next);
    if (radius == 0) throw DataError("transition " + std::to_string(t) + " has radius 0");
    const CentralityVector base = centrality(kind, g_t, pcfg);
    return analyze_with_base(g_t, base, g_next, radius, kind, cfg, pcfg, t, cfg.threads);
}

std::vector<TransitionAnalysis> analyze_trace(const Trace& trace, CentralityKind kind, const SamplerConfig& cfg,
                                              const PagerankConfig& pcfg) {
    cfg.validate();
    const auto pending = changed_transitions(trace);
    std::vector<TransitionAnalysis> out(pending.size());
    detail::parallel_for(pending.size(), cfg.threads, [&](std::size_t i) {
        const auto [t, radius] = pending[i];
        const CentralityVector base = centrality(kind, trace[t], pcfg);
        out[i] = analyze_with_base(trace[t], base, trace[t + 1], radius, kind, cfg, pcfg, t, 1);
    });
    return out;
}

DynamicSignature signature(const Trace& trace, std::span<const CentralityKind> kinds, const SamplerConfig& cfg,
                           const PagerankConfig& pcfg, std::string trace_name) {
    cfg.validate();
    if (trace.size() < 2) throw DataError("signature needs a trace with at least 2 snapshots");
    std::vector<CentralityKind> unique;
    for (CentralityKind k : kinds) {
        if (std::find(unique.begin(), unique.end(), k) == unique.end()) unique.push_back(k);
    }
    if (unique.empty()) throw std::invalid_argument("signature needs at least one centrality");

    const auto pending = changed_transitions(trace);
    if (pending.empty()) throw DataError("every transition of the trace has radius 0");

    // One task per (centrality, transition); outcomes land in fixed slots.
    std::vector<char> flagged(unique.size() * pending.size(), 0);
    detail::parallel_for(flagged.size(), cfg.threads, [&](std::size_t task) {
        const CentralityKind kind = unique[task / pending.size()];
        const auto [t, radius] = pending[task % pending.size()];
        const CentralityVector base = centrality(kind, trace[t], pcfg);
        flagged[task] = analyze_with_base(trace[t], base, trace[t + 1], radius, kind, cfg, pcfg, t, 1).outlier;
    });

    DynamicSignature sig;
    sig.trace_name = std::move(trace_name);
    for (std::size_t c = 0; c < unique.size(); ++c) {
        SignatureEntry e;
        e.centrality = unique[c];
        e.transitions_considered = pending.size();
        e.outliers = static_cast<std::size_t>(
            std::count(flagged.begin() + static_cast<std::ptrdiff_t>(c * pending.size()),
                       flagged.begin() + static_cast<std::ptrdiff_t>((c + 1) * pending.size()), 1));
        e.p = static_cast<double>(e.outliers) / static_cast<double>(e.transitions_considered);
        sig.entries.push_back(e);
    }
    return sig;
}

}  // namespace graphdyn
