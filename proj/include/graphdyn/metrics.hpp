#pragma once

#include "graphdyn/centrality.hpp"
#include "graphdyn/graph.hpp"

#include <cstdint>

namespace graphdyn {

/// Minimum number of link insertions/removals turning one labeled graph into
/// the other, i.e. |E1 Δ E2|. Throws DataError if the universes differ.
std::uint64_t ged(const Snapshot& a, const Snapshot& b);

/// L1 distance between two centrality vectors over the same universe.
double l1_distance(const CentralityVector& a, const CentralityVector& b);

/// Σ_v |C(a, v) − C(b, v)|, vertices matched by label.
double centrality_distance(CentralityKind kind, const Snapshot& a, const Snapshot& b,
                           const PagerankConfig& cfg = {});

}  // namespace graphdyn
