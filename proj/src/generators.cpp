#include "graphdyn/generators.hpp"

#include "graphdyn/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace graphdyn {

namespace {

/// Edge sequence under construction plus the bookkeeping the models need.
class GrowingGraph {
public:
    explicit GrowingGraph(std::size_t vertices) : degrees_(vertices, 0) {}

    std::size_t vertex_count() const { return degrees_.size(); }
    std::size_t edge_count() const { return events_.size(); }
    std::span<const std::size_t> degrees() const { return degrees_; }
    std::span<const IndexPair> events() const { return events_; }

    std::size_t add_vertex() {
        degrees_.push_back(0);
        return degrees_.size() - 1;
    }

    bool has_edge(std::size_t a, std::size_t b) const { return present_.contains(key(a, b)); }

    void add_edge(std::size_t a, std::size_t b) {
        present_.insert(key(a, b));
        ++degrees_[a];
        ++degrees_[b];
        const auto lo = static_cast<std::uint32_t>(std::min(a, b));
        const auto hi = static_cast<std::uint32_t>(std::max(a, b));
        events_.push_back({lo, hi});
    }

    bool complete() const { return events_.size() == pair_count(degrees_.size()); }

private:
    static std::uint64_t key(std::size_t a, std::size_t b) {
        return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    }

    std::vector<std::size_t> degrees_;
    std::vector<IndexPair> events_;
    std::unordered_set<std::uint64_t> present_;
};

/// Snapshot i holds the first (initial + i) edges of the event list.
Trace to_trace(const GrowingGraph& graph, std::size_t initial_edges) {
    std::vector<VertexId> ids(graph.vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = VertexId{i};
    const Snapshot base(std::move(ids), {});

    const auto events = graph.events();
    std::vector<Snapshot> snapshots;
    snapshots.reserve(events.size() - initial_edges + 1);
    for (std::size_t len = initial_edges; len <= events.size(); ++len) {
        snapshots.push_back(base.with_index_edges({events.begin(), events.begin() + static_cast<std::ptrdiff_t>(len)}));
    }
    return Trace(std::move(snapshots));
}

Trace generate_er(const GeneratorConfig& cfg, Rng& rng) {
    const std::size_t steps = cfg.steps.value_or(cfg.n);
    GrowingGraph g(cfg.n);
    // Rank among the still-absent pairs, mapped back to a global rank.
    std::vector<std::uint64_t> taken;
    taken.reserve(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        std::uint64_t rank = uniform_below(rng, pair_count(cfg.n) - taken.size());
        // Shift past already-taken ranks (kept sorted).
        for (std::uint64_t t : taken) {
            if (t > rank) break;
            ++rank;
        }
        taken.insert(std::upper_bound(taken.begin(), taken.end(), rank), rank);
        const IndexPair p = pair_from_rank(rank, cfg.n);
        g.add_edge(p.first, p.second);
    }
    return to_trace(g, 0);
}

Trace generate_rr(const GeneratorConfig& cfg, Rng& rng) {
    const std::size_t target = cfg.n * cfg.d / 2;
    const std::size_t steps = cfg.steps.value_or(target);
    for (std::size_t attempt = 0; attempt <= cfg.rr_restart_budget; ++attempt) {
        GrowingGraph g(cfg.n);
        std::vector<IndexPair> candidates;
        while (g.edge_count() < target) {
            candidates.clear();
            const auto deg = g.degrees();
            for (std::size_t a = 0; a < cfg.n; ++a) {
                if (deg[a] >= cfg.d) continue;
                for (std::size_t b = a + 1; b < cfg.n; ++b) {
                    if (deg[b] < cfg.d && !g.has_edge(a, b)) {
                        candidates.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
                    }
                }
            }
            if (candidates.empty()) break;
            const IndexPair p = candidates[uniform_below(rng, candidates.size())];
            g.add_edge(p.first, p.second);
        }
        if (g.edge_count() == target) {
            GrowingGraph prefix(cfg.n);
            for (std::size_t i = 0; i < steps; ++i) prefix.add_edge(g.events()[i].first, g.events()[i].second);
            return to_trace(prefix, 0);
        }
    }
    throw DataError("random regular construction hit a dead end " + std::to_string(cfg.rr_restart_budget + 1) +
                    " times");
}

/// Picks a preferential endpoint among vertices [0, limit).
std::size_t pick_existing(const GrowingGraph& g, std::size_t limit, Rng& rng) {
    return preferential_pick(g.degrees().first(limit), rng);
}

Trace generate_ba(const GeneratorConfig& cfg, Rng& rng) {
    GrowingGraph g(2);
    g.add_edge(0, 1);
    auto done = [&] {
        return cfg.steps ? g.edge_count() - 1 >= *cfg.steps : false;
    };
    while (!done() && (cfg.steps || g.vertex_count() < cfg.n)) {
        const std::size_t existing = g.vertex_count();
        const std::size_t v = g.add_vertex();
        const std::size_t links = std::min(cfg.m, existing);
        for (std::size_t e = 0; e < links && !done(); ++e) {
            std::size_t target;
            do {
                target = pick_existing(g, existing, rng);
            } while (g.has_edge(v, target));
            g.add_edge(v, target);
        }
    }
    return to_trace(g, 1);
}

Trace generate_cm(const GeneratorConfig& cfg, Rng& rng) {
    const bool log_schedule = cfg.model == GeneratorModel::CMLOG;
    auto node_probability = [&](std::size_t t) -> double {
        if (!log_schedule) return 0.5;
        if (cfg.node_event_probability) return cfg.node_event_probability(t);
        return 1.0 / std::log2(static_cast<double>(t) + 2.0);
    };

    GrowingGraph g(2);
    g.add_edge(0, 1);
    for (std::size_t t = 0;; ++t) {
        if (cfg.steps ? t >= *cfg.steps : g.vertex_count() >= cfg.n) break;
        const bool node_event = g.complete() || uniform_unit(rng) < node_probability(t);
        if (node_event) {
            const std::size_t existing = g.vertex_count();
            const std::size_t target = pick_existing(g, existing, rng);
            g.add_edge(g.add_vertex(), target);
        } else {
            const std::size_t count = g.vertex_count();
            std::size_t a;
            std::size_t b;
            do {
                a = pick_existing(g, count, rng);
                b = pick_existing(g, count, rng);
            } while (a == b || g.has_edge(a, b));
            g.add_edge(a, b);
        }
    }
    return to_trace(g, 1);
}

}  // namespace

std::string_view to_string(GeneratorModel model) {
    switch (model) {
        case GeneratorModel::ER: return "ER";
        case GeneratorModel::RR: return "RR";
        case GeneratorModel::BA: return "BA";
        case GeneratorModel::CMHALF: return "CMHALF";
        case GeneratorModel::CMLOG: return "CMLOG";
    }
    return "?";
}

std::optional<GeneratorModel> parse_generator_model(std::string_view text) {
    std::string upper(text);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (GeneratorModel m : {GeneratorModel::ER, GeneratorModel::RR, GeneratorModel::BA, GeneratorModel::CMHALF,
                             GeneratorModel::CMLOG}) {
        if (upper == to_string(m)) return m;
    }
    return std::nullopt;
}

void GeneratorConfig::validate() const {
    if (n < 2) throw std::invalid_argument("generator needs n >= 2");
    if (steps && *steps == 0) throw std::invalid_argument("generator needs steps >= 1");
    switch (model) {
        case GeneratorModel::ER:
            if (steps.value_or(n) > pair_count(n)) {
                throw std::invalid_argument("ER steps exceed the number of vertex pairs");
            }
            break;
        case GeneratorModel::RR:
            if (d == 0 || d >= n) throw std::invalid_argument("RR needs 0 < d < n");
            if ((n * d) % 2 != 0) throw std::invalid_argument("RR needs n*d even");
            if (steps && *steps > n * d / 2) throw std::invalid_argument("RR steps exceed n*d/2 edges");
            break;
        case GeneratorModel::BA:
            if (m == 0) throw std::invalid_argument("BA needs m >= 1");
            [[fallthrough]];
        case GeneratorModel::CMHALF:
        case GeneratorModel::CMLOG:
            if (!steps && n < 3) throw std::invalid_argument("growth models need n >= 3 to produce a transition");
            break;
    }
}

Trace generate(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng = make_stream(cfg.seed);
    switch (cfg.model) {
        case GeneratorModel::ER: return generate_er(cfg, rng);
        case GeneratorModel::RR: return generate_rr(cfg, rng);
        case GeneratorModel::BA: return generate_ba(cfg, rng);
        case GeneratorModel::CMHALF:
        case GeneratorModel::CMLOG: return generate_cm(cfg, rng);
    }
    throw std::invalid_argument("unknown generator model");
}

std::size_t preferential_pick(std::span<const std::size_t> degrees, Rng& rng) {
    if (degrees.empty()) throw std::invalid_argument("preferential_pick: no vertices");
    const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
    if (total == 0) return uniform_below(rng, degrees.size());
    // Inverse of the cumulative degree distribution.
    std::uint64_t r = uniform_below(rng, total);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (r < degrees[i]) return i;
        r -= degrees[i];
    }
    return degrees.size() - 1;
}

}  // namespace graphdyn
