#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace graphdyn {

/// Stable vertex label. Identity is preserved across all snapshots of a trace.
struct VertexId {
    std::uint64_t value = 0;

    constexpr auto operator<=>(const VertexId&) const = default;
};

/// Undirected edge stored canonically (u < v).
struct Edge {
    VertexId u;
    VertexId v;

    constexpr auto operator<=>(const Edge&) const = default;
};

/// Canonicalizes {a, b}. Throws DataError on a self-loop.
Edge make_edge(VertexId a, VertexId b);

/// Edge expressed as positions in a snapshot's universe, first < second.
struct IndexPair {
    std::uint32_t first = 0;
    std::uint32_t second = 0;

    constexpr auto operator<=>(const IndexPair&) const = default;
};

/// Number of unordered non-self pairs on n vertices.
constexpr std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Row-major rank of (i, j), i < j, among all pairs on n vertices.
std::uint64_t pair_rank(IndexPair p, std::uint64_t n);

/// Inverse of pair_rank.
IndexPair pair_from_rank(std::uint64_t rank, std::uint64_t n);

using Universe = std::vector<VertexId>;

/// Immutable labeled undirected graph over an ordered vertex universe.
///
/// Vertices are addressed either by label (VertexId) or by their position in
/// the sorted universe; the latter is what the numeric kernels use. Snapshots
/// derived from one another share the universe storage, so comparing them is
/// cheap.
class Snapshot {
public:
    Snapshot();

    /// Duplicate universe entries are rejected; duplicate edges collapse.
    /// Throws DataError for self-loops or endpoints outside the universe.
    Snapshot(std::vector<VertexId> universe, std::vector<Edge> edges);

    /// Universe is the set of edge endpoints.
    static Snapshot from_edges(std::vector<Edge> edges);

    const Universe& universe() const noexcept { return *universe_; }
    const std::shared_ptr<const Universe>& shared_universe() const noexcept { return universe_; }
    std::size_t vertex_count() const noexcept { return universe_->size(); }
    std::size_t edge_count() const noexcept { return pairs_.size(); }

    /// Sorted canonical edges.
    std::vector<Edge> edges() const;
    /// Sorted edges in index form.
    std::span<const IndexPair> index_edges() const noexcept { return pairs_; }

    std::optional<std::size_t> index_of(VertexId v) const;
    /// Throws DataError naming the vertex when it is not in the universe.
    std::size_t require_index(VertexId v) const;
    VertexId vertex_at(std::size_t index) const { return (*universe_)[index]; }

    /// Sorted neighbor positions.
    std::span<const std::uint32_t> adjacent(std::size_t index) const { return adjacency_[index]; }
    std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }
    bool has_edge_at(std::size_t i, std::size_t j) const;
    bool has_edge(VertexId a, VertexId b) const;

    /// Γ(v), sorted by label.
    std::vector<VertexId> neighbors(VertexId v) const;

    bool same_universe(const Snapshot& other) const;

    /// Re-expresses this graph over a superset universe; new vertices are isolated.
    Snapshot with_universe(std::shared_ptr<const Universe> universe) const;

    /// Returns a copy with each listed pair toggled (added if absent, removed
    /// if present). Pairs must be distinct and in range.
    Snapshot toggled(std::span<const IndexPair> pairs) const;

    /// Builds a snapshot over this snapshot's universe from index pairs.
    Snapshot with_index_edges(std::vector<IndexPair> pairs) const;

    friend bool operator==(const Snapshot& a, const Snapshot& b);

private:
    Snapshot(std::shared_ptr<const Universe> universe, std::vector<IndexPair> sorted_pairs);
    void build_adjacency();

    std::shared_ptr<const Universe> universe_;
    std::vector<IndexPair> pairs_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Ordered sequence of snapshots sharing one universe, with optional
/// strictly increasing timestamps.
class Trace {
public:
    /// Throws DataError if the list is empty, universes differ, or the
    /// timestamps are not strictly increasing / not one per snapshot.
    explicit Trace(std::vector<Snapshot> snapshots, std::vector<std::int64_t> timestamps = {});

    std::size_t size() const noexcept { return snapshots_.size(); }
    const Snapshot& operator[](std::size_t i) const { return snapshots_[i]; }
    const Snapshot& back() const noexcept { return snapshots_.back(); }
    std::span<const Snapshot> snapshots() const noexcept { return snapshots_; }
    /// Empty when the trace carries no time information.
    std::span<const std::int64_t> timestamps() const noexcept { return timestamps_; }
    const Universe& universe() const noexcept { return snapshots_.front().universe(); }

    auto begin() const { return snapshots_.begin(); }
    auto end() const { return snapshots_.end(); }

private:
    std::vector<Snapshot> snapshots_;
    std::vector<std::int64_t> timestamps_;
};

/// Re-expresses every snapshot over the union of all universes.
Trace align_universe(std::vector<Snapshot> snapshots, std::vector<std::int64_t> timestamps = {});

}  // namespace graphdyn
