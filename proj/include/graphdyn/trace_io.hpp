#pragma once

#include "graphdyn/dynamics.hpp"
#include "graphdyn/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphdyn {

/// One `timestamp u v` line of a temporal edge list.
struct TemporalEdgeRecord {
    std::int64_t timestamp = 0;
    VertexId u;
    VertexId v;
};

enum class BinningMode {
    /// Snapshot t holds the edges with timestamp in [b·w, (b+1)·w), where b
    /// runs from the bin of the earliest record to the bin of the latest.
    Window,
    /// Snapshot t holds every edge seen up to the t-th boundary. With width
    /// 0 the boundaries are the distinct timestamps, otherwise window ends.
    Cumulative,
};

struct BinningPolicy {
    BinningMode mode = BinningMode::Window;
    std::int64_t width = 1;

    static BinningPolicy window(std::int64_t width) { return {BinningMode::Window, width}; }
    static BinningPolicy cumulative(std::int64_t width = 0) { return {BinningMode::Cumulative, width}; }

    /// Throws std::invalid_argument for a non-positive window (or a negative
    /// cumulative width).
    void validate() const;
};

/// Reads whitespace-separated `timestamp u v` records; blank lines and lines
/// starting with '#' are skipped. Throws ParseError with the line number on
/// malformed input and DataError when no record is found.
std::vector<TemporalEdgeRecord> parse_temporal_records(std::istream& in);

/// Groups records into an aligned trace over the union of all endpoints.
/// Duplicate edges within a snapshot collapse. Trace timestamps are the bin
/// starts (Window) or boundaries (Cumulative).
Trace bin_records(std::span<const TemporalEdgeRecord> records, const BinningPolicy& policy);

Trace parse_temporal_edge_list(std::istream& in, const BinningPolicy& policy);

/// Writes every snapshot's full edge list stamped with its timestamp (or its
/// index when the trace has none). Reading it back with a window of 1 (or the
/// matching window for timestamped traces) reproduces every snapshot that
/// has at least one edge. Isolated vertices are not representable.
void write_edge_list(const Trace& trace, std::ostream& out, std::string_view header_comment = {});

enum class ExportFormat { Csv, Json };

std::optional<ExportFormat> parse_export_format(std::string_view text);

/// Fixed-point with 9 decimals, the number format of every CSV export.
std::string format_decimal(double value);

/// CSV columns: t,radius,measured,sample_median,sample_mean,sample_sd,lower2s,upper2s,outlier.
/// JSON carries the same fields per transition plus the raw sample
/// distances. Throws DataError for an empty list or mixed centralities.
void export_chronogram(std::span<const TransitionAnalysis> analyses, std::ostream& out, ExportFormat format);

/// Inverse of the JSON chronogram export.
std::vector<TransitionAnalysis> parse_chronogram_json(std::istream& in);

/// CSV columns: trace,centrality,p,transitions. JSON adds the outlier counts
/// and the 5% null-model reference line as metadata.
void export_signature(const DynamicSignature& sig, std::ostream& out, ExportFormat format);

/// Inverse of the JSON signature export.
DynamicSignature parse_signature_json(std::istream& in);

/// Reference outlier fraction for a trace that follows the null model.
inline constexpr double kNullReferenceP = 0.05;

}  // namespace graphdyn
