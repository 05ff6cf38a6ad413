#include "graphdyn/centrality.hpp"

#include "graphdyn/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace graphdyn {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Brandes accumulation with the endpoint convention. `adj(i)` yields the
/// neighbor positions of i.
template <class AdjFn>
std::vector<double> betweenness_kernel(std::size_t n, AdjFn&& adj) {
    std::vector<double> interior(n, 0.0);
    std::vector<double> endpoint(n, 0.0);

    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        if (adj(s).empty()) continue;
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(static_cast<std::uint32_t>(s));
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::uint32_t x = order[head];
            for (std::uint32_t w : adj(x)) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[x] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[x] + 1) sigma[w] += sigma[x];
            }
        }
        // s is an endpoint of a shortest path to every other vertex it reaches.
        endpoint[s] = static_cast<double>(order.size() - 1);

        for (std::size_t i = order.size(); i-- > 1;) {
            const std::uint32_t w = order[i];
            for (std::uint32_t x : adj(w)) {
                if (dist[x] + 1 == dist[w]) {
                    delta[x] += sigma[x] / sigma[w] * (1.0 + delta[w]);
                }
            }
            interior[w] += delta[w];
        }
    }

    // Every unordered pair was visited from both ends.
    for (std::size_t v = 0; v < n; ++v) {
        interior[v] = interior[v] / 2.0 + endpoint[v];
    }
    return interior;
}

/// Calls visit(w, hops) for every vertex reachable from s (excluding s).
template <class Visit>
void bfs_from(const Snapshot& g, std::size_t s, std::vector<std::uint32_t>& dist,
              std::vector<std::uint32_t>& queue, Visit&& visit) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    dist[s] = 0;
    queue.push_back(static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t x = queue[head];
        for (std::uint32_t w : g.adjacent(x)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
                visit(w, dist[w]);
            }
        }
    }
}

}  // namespace

std::string_view to_string(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::DC: return "DC";
        case CentralityKind::BC: return "BC";
        case CentralityKind::EC: return "EC";
        case CentralityKind::CC: return "CC";
        case CentralityKind::PC: return "PC";
        case CentralityKind::KC: return "KC";
    }
    return "?";
}

std::optional<CentralityKind> parse_centrality(std::string_view text) {
    std::string upper(text);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (CentralityKind k : kAllCentralities) {
        if (upper == to_string(k)) return k;
    }
    return std::nullopt;
}

CentralityVector::CentralityVector(CentralityKind kind, std::shared_ptr<const Universe> universe,
                                   std::vector<double> values)
    : kind_(kind), universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != universe_->size()) {
        throw std::invalid_argument("centrality vector size does not match universe");
    }
}

double CentralityVector::at(VertexId v) const {
    auto it = std::lower_bound(universe_->begin(), universe_->end(), v);
    if (it == universe_->end() || *it != v) {
        throw DataError("unknown vertex " + std::to_string(v.value));
    }
    return values_[static_cast<std::size_t>(it - universe_->begin())];
}

void PagerankConfig::validate() const {
    if (!(damping > 0.0 && damping < 1.0)) {
        throw std::invalid_argument("pagerank damping must lie in (0, 1)");
    }
    if (!(tolerance > 0.0)) throw std::invalid_argument("pagerank tolerance must be positive");
    if (max_iterations == 0) throw std::invalid_argument("pagerank max_iterations must be positive");
}

CentralityVector degree_centrality(const Snapshot& g) {
    std::vector<double> values(g.vertex_count());
    for (std::size_t v = 0; v < values.size(); ++v) {
        values[v] = static_cast<double>(g.degree(v));
    }
    return {CentralityKind::DC, g.shared_universe(), std::move(values)};
}

CentralityVector betweenness_centrality(const Snapshot& g) {
    auto values = betweenness_kernel(g.vertex_count(), [&](std::size_t i) { return g.adjacent(i); });
    return {CentralityKind::BC, g.shared_universe(), std::move(values)};
}

CentralityVector ego_centrality(const Snapshot& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> values(n, 0.0);
    std::vector<std::int64_t> local_of(n, -1);
    std::vector<std::uint32_t> members;
    std::vector<std::vector<std::uint32_t>> local_adj;

    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        members.assign(1, static_cast<std::uint32_t>(v));
        members.insert(members.end(), g.adjacent(v).begin(), g.adjacent(v).end());
        for (std::size_t i = 0; i < members.size(); ++i) local_of[members[i]] = static_cast<std::int64_t>(i);

        local_adj.assign(members.size(), {});
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::uint32_t w : g.adjacent(members[i])) {
                if (local_of[w] >= 0) local_adj[i].push_back(static_cast<std::uint32_t>(local_of[w]));
            }
        }
        auto ego = betweenness_kernel(members.size(), [&](std::size_t i) {
            return std::span<const std::uint32_t>(local_adj[i]);
        });
        values[v] = ego[0];

        for (std::uint32_t m : members) local_of[m] = -1;
    }
    return {CentralityKind::EC, g.shared_universe(), std::move(values)};
}

CentralityVector closeness_centrality(const Snapshot& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> values(n, 0.0);
    std::vector<std::uint32_t> dist(n);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (g.degree(s) == 0) continue;
        double total = 0.0;
        bfs_from(g, s, dist, queue, [&](std::uint32_t, std::uint32_t hops) {
            total += std::ldexp(1.0, -static_cast<int>(hops));
        });
        values[s] = total;
    }
    return {CentralityKind::CC, g.shared_universe(), std::move(values)};
}

CentralityVector pagerank_centrality(const Snapshot& g, const PagerankConfig& cfg) {
    cfg.validate();
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> active;
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) > 0) active.push_back(static_cast<std::uint32_t>(v));
    }
    std::vector<double> rank(n, 0.0);
    if (active.empty()) return {CentralityKind::PC, g.shared_universe(), std::move(rank)};

    const double population = static_cast<double>(active.size());
    const double teleport = (1.0 - cfg.damping) / population;
    for (std::uint32_t v : active) rank[v] = 1.0 / population;

    std::vector<double> share(n, 0.0);
    std::vector<double> next(n, 0.0);
    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        for (std::uint32_t v : active) share[v] = rank[v] / static_cast<double>(g.degree(v));
        residual = 0.0;
        for (std::uint32_t v : active) {
            double sum = 0.0;
            for (std::uint32_t w : g.adjacent(v)) sum += share[w];
            next[v] = teleport + cfg.damping * sum;
            residual += std::abs(next[v] - rank[v]);
        }
        rank.swap(next);
        if (residual < cfg.tolerance) {
            return {CentralityKind::PC, g.shared_universe(), std::move(rank)};
        }
    }
    throw ConvergenceError("pagerank did not converge within " + std::to_string(cfg.max_iterations) +
                               " iterations (residual " + std::to_string(residual) + ")",
                           residual);
}

CentralityVector cluster_centrality(const Snapshot& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> values(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto nbrs = g.adjacent(v);
        const std::size_t deg = nbrs.size();
        if (deg == 0) continue;
        if (deg == 1) {
            values[v] = 1.0;
            continue;
        }
        std::size_t links = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            for (std::size_t j = i + 1; j < deg; ++j) {
                if (g.has_edge_at(nbrs[i], nbrs[j])) ++links;
            }
        }
        values[v] = 2.0 * static_cast<double>(links) / static_cast<double>(deg * (deg - 1));
    }
    return {CentralityKind::KC, g.shared_universe(), std::move(values)};
}

CentralityVector centrality(CentralityKind kind, const Snapshot& g, const PagerankConfig& cfg) {
    switch (kind) {
        case CentralityKind::DC: return degree_centrality(g);
        case CentralityKind::BC: return betweenness_centrality(g);
        case CentralityKind::EC: return ego_centrality(g);
        case CentralityKind::CC: return closeness_centrality(g);
        case CentralityKind::PC: return pagerank_centrality(g, cfg);
        case CentralityKind::KC: return cluster_centrality(g);
    }
    throw std::invalid_argument("unknown centrality kind");
}

}  // namespace graphdyn
