#include "graphdyn/metrics.hpp"

#include "graphdyn/error.hpp"

#include <cmath>

namespace graphdyn {

std::uint64_t ged(const Snapshot& a, const Snapshot& b) {
    if (!a.same_universe(b)) {
        throw DataError("graph edit distance needs snapshots over the same universe");
    }
    const auto ea = a.index_edges();
    const auto eb = b.index_edges();
    // Both lists are sorted; count the symmetric difference in one merge.
    std::uint64_t diff = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i] < eb[j]) {
            ++diff;
            ++i;
        } else if (eb[j] < ea[i]) {
            ++diff;
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return diff + (ea.size() - i) + (eb.size() - j);
}

double l1_distance(const CentralityVector& a, const CentralityVector& b) {
    if (a.size() != b.size() || a.universe() != b.universe()) {
        throw DataError("centrality vectors cover different universes");
    }
    double total = 0.0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        total += std::abs(a[v] - b[v]);
    }
    return total;
}

double centrality_distance(CentralityKind kind, const Snapshot& a, const Snapshot& b,
                           const PagerankConfig& cfg) {
    if (!a.same_universe(b)) {
        throw DataError("centrality distance needs snapshots over the same universe");
    }
    return l1_distance(centrality(kind, a, cfg), centrality(kind, b, cfg));
}

}  // namespace graphdyn
