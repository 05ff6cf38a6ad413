#include "graphdyn/graph.hpp"

#include "graphdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

namespace graphdyn {

namespace {

std::string label(VertexId v) { return std::to_string(v.value); }

std::uint64_t row_start(std::uint64_t i, std::uint64_t n) { return i * (2 * n - i - 1) / 2; }

}  // namespace

Edge make_edge(VertexId a, VertexId b) {
    if (a == b) {
        throw DataError("self-loop on vertex " + label(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::uint64_t pair_rank(IndexPair p, std::uint64_t n) {
    return row_start(p.first, n) + (p.second - p.first - 1);
}

IndexPair pair_from_rank(std::uint64_t rank, std::uint64_t n) {
    // Closed-form row estimate, then correct for rounding.
    const double nn = static_cast<double>(n);
    const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(rank);
    auto i = static_cast<std::uint64_t>(std::max(0.0, std::floor(((2 * nn - 1) - std::sqrt(std::max(0.0, disc))) / 2)));
    while (i > 0 && row_start(i, n) > rank) --i;
    while (i + 1 < n && row_start(i + 1, n) <= rank) ++i;
    const std::uint64_t j = i + 1 + (rank - row_start(i, n));
    return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
}

Snapshot::Snapshot() : universe_(std::make_shared<const Universe>()) {}

Snapshot::Snapshot(std::vector<VertexId> universe, std::vector<Edge> edges) {
    std::sort(universe.begin(), universe.end());
    if (auto dup = std::adjacent_find(universe.begin(), universe.end()); dup != universe.end()) {
        throw DataError("duplicate vertex " + label(*dup) + " in universe");
    }
    universe_ = std::make_shared<const Universe>(std::move(universe));

    pairs_.reserve(edges.size());
    for (const Edge& e : edges) {
        const Edge c = make_edge(e.u, e.v);
        pairs_.push_back({static_cast<std::uint32_t>(require_index(c.u)),
                          static_cast<std::uint32_t>(require_index(c.v))});
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    build_adjacency();
}

Snapshot::Snapshot(std::shared_ptr<const Universe> universe, std::vector<IndexPair> sorted_pairs)
    : universe_(std::move(universe)), pairs_(std::move(sorted_pairs)) {
    build_adjacency();
}

Snapshot Snapshot::from_edges(std::vector<Edge> edges) {
    std::vector<VertexId> universe;
    universe.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        universe.push_back(e.u);
        universe.push_back(e.v);
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    return Snapshot(std::move(universe), std::move(edges));
}

void Snapshot::build_adjacency() {
    adjacency_.assign(universe_->size(), {});
    for (const IndexPair& p : pairs_) {
        adjacency_[p.first].push_back(p.second);
        adjacency_[p.second].push_back(p.first);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

std::vector<Edge> Snapshot::edges() const {
    std::vector<Edge> out;
    out.reserve(pairs_.size());
    for (const IndexPair& p : pairs_) {
        out.push_back({vertex_at(p.first), vertex_at(p.second)});
    }
    return out;
}

std::optional<std::size_t> Snapshot::index_of(VertexId v) const {
    auto it = std::lower_bound(universe_->begin(), universe_->end(), v);
    if (it == universe_->end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(std::distance(universe_->begin(), it));
}

std::size_t Snapshot::require_index(VertexId v) const {
    if (auto i = index_of(v)) return *i;
    throw DataError("unknown vertex " + label(v));
}

bool Snapshot::has_edge_at(std::size_t i, std::size_t j) const {
    const auto& list = adjacency_[i];
    return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(j));
}

bool Snapshot::has_edge(VertexId a, VertexId b) const {
    auto i = index_of(a);
    auto j = index_of(b);
    return i && j && has_edge_at(*i, *j);
}

std::vector<VertexId> Snapshot::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (std::uint32_t w : adjacency_[require_index(v)]) {
        out.push_back(vertex_at(w));
    }
    return out;
}

bool Snapshot::same_universe(const Snapshot& other) const {
    return universe_ == other.universe_ || *universe_ == *other.universe_;
}

Snapshot Snapshot::with_universe(std::shared_ptr<const Universe> universe) const {
    if (universe == universe_) return *this;
    std::vector<std::uint32_t> remap(universe_->size());
    for (std::size_t i = 0; i < universe_->size(); ++i) {
        auto it = std::lower_bound(universe->begin(), universe->end(), (*universe_)[i]);
        if (it == universe->end() || *it != (*universe_)[i]) {
            throw DataError("vertex " + label((*universe_)[i]) + " missing from target universe");
        }
        remap[i] = static_cast<std::uint32_t>(std::distance(universe->begin(), it));
    }
    std::vector<IndexPair> pairs;
    pairs.reserve(pairs_.size());
    for (const IndexPair& p : pairs_) {
        pairs.push_back({remap[p.first], remap[p.second]});
    }
    // Remapping is monotone, so the order is preserved.
    return Snapshot(std::move(universe), std::move(pairs));
}

Snapshot Snapshot::toggled(std::span<const IndexPair> pairs) const {
    std::vector<IndexPair> flips(pairs.begin(), pairs.end());
    std::sort(flips.begin(), flips.end());
    std::vector<IndexPair> out;
    out.reserve(pairs_.size() + flips.size());
    std::set_symmetric_difference(pairs_.begin(), pairs_.end(), flips.begin(), flips.end(),
                                  std::back_inserter(out));
    return Snapshot(universe_, std::move(out));
}

Snapshot Snapshot::with_index_edges(std::vector<IndexPair> pairs) const {
    const auto n = static_cast<std::uint32_t>(universe_->size());
    for (IndexPair& p : pairs) {
        if (p.first == p.second) throw DataError("self-loop at position " + std::to_string(p.first));
        if (p.first > p.second) std::swap(p.first, p.second);
        if (p.second >= n) throw DataError("vertex position out of range");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Snapshot(universe_, std::move(pairs));
}

bool operator==(const Snapshot& a, const Snapshot& b) {
    return a.same_universe(b) && a.pairs_ == b.pairs_;
}

Trace::Trace(std::vector<Snapshot> snapshots, std::vector<std::int64_t> timestamps)
    : snapshots_(std::move(snapshots)), timestamps_(std::move(timestamps)) {
    if (snapshots_.empty()) {
        throw DataError("trace needs at least one snapshot");
    }
    for (const Snapshot& s : snapshots_) {
        if (!s.same_universe(snapshots_.front())) {
            throw DataError("trace snapshots must share one universe; align them first");
        }
    }
    if (!timestamps_.empty()) {
        if (timestamps_.size() != snapshots_.size()) {
            throw DataError("expected one timestamp per snapshot");
        }
        for (std::size_t i = 1; i < timestamps_.size(); ++i) {
            if (timestamps_[i] <= timestamps_[i - 1]) {
                throw DataError("timestamps must be strictly increasing");
            }
        }
    }
}

Trace align_universe(std::vector<Snapshot> snapshots, std::vector<std::int64_t> timestamps) {
    if (snapshots.empty()) {
        throw DataError("cannot align an empty snapshot list");
    }
    std::vector<VertexId> all;
    for (const Snapshot& s : snapshots) {
        all.insert(all.end(), s.universe().begin(), s.universe().end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    auto shared = std::make_shared<const Universe>(std::move(all));
    for (Snapshot& s : snapshots) {
        s = s.with_universe(shared);
    }
    return Trace(std::move(snapshots), std::move(timestamps));
}

}  // namespace graphdyn
