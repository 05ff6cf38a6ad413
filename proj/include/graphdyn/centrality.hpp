#pragma once

#include "graphdyn/graph.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace graphdyn {

enum class CentralityKind { DC, BC, EC, CC, PC, KC };

inline constexpr std::array<CentralityKind, 6> kAllCentralities = {
    CentralityKind::DC, CentralityKind::BC, CentralityKind::EC,
    CentralityKind::CC, CentralityKind::PC, CentralityKind::KC};

std::string_view to_string(CentralityKind kind);
/// Accepts the two-letter code in either case.
std::optional<CentralityKind> parse_centrality(std::string_view text);

/// Per-vertex values for one centrality on one snapshot, indexed by the
/// snapshot's universe order.
class CentralityVector {
public:
    CentralityVector(CentralityKind kind, std::shared_ptr<const Universe> universe,
                     std::vector<double> values);

    CentralityKind kind() const noexcept { return kind_; }
    const Universe& universe() const noexcept { return *universe_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t index) const { return values_[index]; }
    /// Throws DataError for a vertex outside the universe.
    double at(VertexId v) const;

private:
    CentralityKind kind_;
    std::shared_ptr<const Universe> universe_;
    std::vector<double> values_;
};

struct PagerankConfig {
    double damping = 0.85;
    /// Stop once the L1 change between iterations drops below this.
    double tolerance = 1e-12;
    std::size_t max_iterations = 1000;

    /// Throws std::invalid_argument unless 0 < damping < 1, tolerance > 0,
    /// max_iterations > 0.
    void validate() const;
};

CentralityVector degree_centrality(const Snapshot& g);

/// Sum over unordered pairs {x, w} of the fraction of shortest x-w paths
/// through v. A vertex counts as lying on its own shortest paths, so every
/// connected pair with v as an endpoint contributes 1; disconnected pairs
/// contribute nothing.
CentralityVector betweenness_centrality(const Snapshot& g);

/// Betweenness of v inside the subgraph induced by v and its neighbors.
CentralityVector ego_centrality(const Snapshot& g);

/// Σ_w 2^-dist(v, w); unreachable vertices contribute 0.
CentralityVector closeness_centrality(const Snapshot& g);

/// Damped random-walk stationary values over the non-isolated vertices,
/// iterated from the uniform vector. Isolated vertices get 0 and do not
/// take a share of the teleport mass. Throws ConvergenceError when the
/// tolerance is not met within max_iterations.
CentralityVector pagerank_centrality(const Snapshot& g, const PagerankConfig& cfg = {});

/// Local clustering coefficient; degree 0 maps to 0 and degree 1 to 1.
CentralityVector cluster_centrality(const Snapshot& g);

CentralityVector centrality(CentralityKind kind, const Snapshot& g, const PagerankConfig& cfg = {});

}  // namespace graphdyn
