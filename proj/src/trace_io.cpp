#include "graphdyn/trace_io.hpp"

#include "graphdyn/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace graphdyn {

namespace {

using nlohmann::json;

template <class Int>
bool parse_int(std::string_view token, Int& out) {
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Floor division for possibly large non-negative timestamps.
std::int64_t bin_of(std::int64_t ts, std::int64_t width) { return ts / width; }

void check_stream(std::ostream& out) {
    if (!out) throw DataError("write failure");
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

CentralityKind centrality_from_json(const json& j) {
    auto kind = parse_centrality(j.get<std::string>());
    if (!kind) throw DataError("unknown centrality '" + j.get<std::string>() + "'");
    return *kind;
}

}  // namespace

void BinningPolicy::validate() const {
    if (mode == BinningMode::Window && width <= 0) {
        throw std::invalid_argument("window width must be positive");
    }
    if (mode == BinningMode::Cumulative && width < 0) {
        throw std::invalid_argument("cumulative window width must be non-negative");
    }
}

std::vector<TemporalEdgeRecord> parse_temporal_records(std::istream& in) {
    std::vector<TemporalEdgeRecord> records;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 3) {
            throw ParseError(number, "expected 'timestamp u v', found " + std::to_string(tokens.size()) + " fields");
        }
        TemporalEdgeRecord rec;
        if (!parse_int(tokens[0], rec.timestamp) || rec.timestamp < 0) {
            throw ParseError(number, "invalid timestamp '" + std::string(tokens[0]) + "'");
        }
        if (!parse_int(tokens[1], rec.u.value)) {
            throw ParseError(number, "invalid vertex '" + std::string(tokens[1]) + "'");
        }
        if (!parse_int(tokens[2], rec.v.value)) {
            throw ParseError(number, "invalid vertex '" + std::string(tokens[2]) + "'");
        }
        if (rec.u == rec.v) throw ParseError(number, "self-loop on vertex " + std::to_string(rec.u.value));
        records.push_back(rec);
    }
    if (records.empty()) throw DataError("edge list contains no records");
    return records;
}

Trace bin_records(std::span<const TemporalEdgeRecord> records, const BinningPolicy& policy) {
    policy.validate();
    if (records.empty()) throw DataError("edge list contains no records");

    std::vector<VertexId> ids;
    ids.reserve(records.size() * 2);
    for (const auto& r : records) {
        ids.push_back(r.u);
        ids.push_back(r.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const Snapshot base(std::move(ids), {});

    auto pair_of = [&](const TemporalEdgeRecord& r) {
        return IndexPair{static_cast<std::uint32_t>(base.require_index(r.u)),
                         static_cast<std::uint32_t>(base.require_index(r.v))};
    };

    std::vector<TemporalEdgeRecord> sorted(records.begin(), records.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });

    // Boundary list: (bin start stamp, exclusive upper timestamp for membership).
    std::vector<std::pair<std::int64_t, std::int64_t>> bins;
    if (policy.width > 0) {
        const std::int64_t first = bin_of(sorted.front().timestamp, policy.width);
        const std::int64_t last = bin_of(sorted.back().timestamp, policy.width);
        for (std::int64_t b = first; b <= last; ++b) bins.emplace_back(b * policy.width, (b + 1) * policy.width);
    } else {
        for (const auto& r : sorted) {
            if (bins.empty() || bins.back().first != r.timestamp) bins.emplace_back(r.timestamp, r.timestamp + 1);
        }
    }

    std::vector<Snapshot> snapshots;
    std::vector<std::int64_t> stamps;
    snapshots.reserve(bins.size());
    std::vector<IndexPair> current;
    std::size_t cursor = 0;
    for (const auto& [stamp, upper] : bins) {
        if (policy.mode == BinningMode::Window) current.clear();
        while (cursor < sorted.size() && sorted[cursor].timestamp < upper) {
            current.push_back(pair_of(sorted[cursor]));
            ++cursor;
        }
        snapshots.push_back(base.with_index_edges(current));
        stamps.push_back(stamp);
    }
    return Trace(std::move(snapshots), std::move(stamps));
}

Trace parse_temporal_edge_list(std::istream& in, const BinningPolicy& policy) {
    policy.validate();
    const auto records = parse_temporal_records(in);
    return bin_records(records, policy);
}

void write_edge_list(const Trace& trace, std::ostream& out, std::string_view header_comment) {
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    const auto stamps = trace.timestamps();
    for (std::size_t t = 0; t < trace.size(); ++t) {
        const std::int64_t stamp = stamps.empty() ? static_cast<std::int64_t>(t) : stamps[t];
        for (const Edge& e : trace[t].edges()) {
            out << stamp << ' ' << e.u.value << ' ' << e.v.value << '\n';
        }
    }
    out.flush();
    check_stream(out);
}

std::optional<ExportFormat> parse_export_format(std::string_view text) {
    if (text == "csv") return ExportFormat::Csv;
    if (text == "json") return ExportFormat::Json;
    return std::nullopt;
}

std::string format_decimal(double value) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.9f", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

void export_chronogram(std::span<const TransitionAnalysis> analyses, std::ostream& out, ExportFormat format) {
    if (analyses.empty()) throw DataError("chronogram export needs at least one transition");
    const CentralityKind kind = analyses.front().centrality;
    for (const auto& a : analyses) {
        if (a.centrality != kind) throw DataError("chronogram export needs a single centrality kind");
    }

    if (format == ExportFormat::Csv) {
        out << "t,radius,measured,sample_median,sample_mean,sample_sd,lower2s,upper2s,outlier\n";
        for (const auto& a : analyses) {
            out << a.t << ',' << a.radius << ',' << format_decimal(a.measured) << ','
                << format_decimal(a.median()) << ',' << format_decimal(a.mean) << ','
                << format_decimal(a.std_dev) << ',' << format_decimal(a.lower2s()) << ','
                << format_decimal(a.upper2s()) << ',' << (a.outlier ? "true" : "false") << '\n';
        }
    } else {
        json rows = json::array();
        for (const auto& a : analyses) {
            rows.push_back({{"t", a.t},
                            {"radius", a.radius},
                            {"measured", a.measured},
                            {"sample_median", a.median()},
                            {"sample_mean", a.mean},
                            {"sample_sd", a.std_dev},
                            {"lower2s", a.lower2s()},
                            {"upper2s", a.upper2s()},
                            {"outlier", a.outlier},
                            {"sample_distances", a.sample_distances}});
        }
        json doc = {{"centrality", std::string(to_string(kind))}, {"transitions", rows}};
        out << doc.dump(2) << '\n';
    }
    out.flush();
    check_stream(out);
}

std::vector<TransitionAnalysis> parse_chronogram_json(std::istream& in) {
    try {
        const json doc = json::parse(in);
        const CentralityKind kind = centrality_from_json(doc.at("centrality"));
        std::vector<TransitionAnalysis> out;
        for (const auto& row : doc.at("transitions")) {
            TransitionAnalysis a;
            a.t = row.at("t").get<std::size_t>();
            a.radius = row.at("radius").get<std::uint64_t>();
            a.centrality = kind;
            a.measured = row.at("measured").get<double>();
            a.sample_distances = row.at("sample_distances").get<std::vector<double>>();
            a.mean = row.at("sample_mean").get<double>();
            a.std_dev = row.at("sample_sd").get<double>();
            a.outlier = row.at("outlier").get<bool>();
            out.push_back(std::move(a));
        }
        return out;
    } catch (const json::exception& e) {
        throw DataError(std::string("invalid chronogram JSON: ") + e.what());
    }
}

void export_signature(const DynamicSignature& sig, std::ostream& out, ExportFormat format) {
    if (format == ExportFormat::Csv) {
        out << "trace,centrality,p,transitions\n";
        for (const auto& e : sig.entries) {
            out << csv_field(sig.trace_name) << ',' << to_string(e.centrality) << ',' << format_decimal(e.p) << ','
                << e.transitions_considered << '\n';
        }
    } else {
        json rows = json::array();
        for (const auto& e : sig.entries) {
            rows.push_back({{"centrality", std::string(to_string(e.centrality))},
                            {"p", e.p},
                            {"transitions", e.transitions_considered},
                            {"outliers", e.outliers}});
        }
        json doc = {{"trace", sig.trace_name},
                    {"metadata", {{"null_reference_p", kNullReferenceP}}},
                    {"signature", rows}};
        out << doc.dump(2) << '\n';
    }
    out.flush();
    check_stream(out);
}

DynamicSignature parse_signature_json(std::istream& in) {
    try {
        const json doc = json::parse(in);
        DynamicSignature sig;
        sig.trace_name = doc.at("trace").get<std::string>();
        for (const auto& row : doc.at("signature")) {
            SignatureEntry e;
            e.centrality = centrality_from_json(row.at("centrality"));
            e.p = row.at("p").get<double>();
            e.transitions_considered = row.at("transitions").get<std::size_t>();
            e.outliers = row.value("outliers", std::size_t{0});
            sig.entries.push_back(e);
        }
        return sig;
    } catch (const json::exception& e) {
        throw DataError(std::string("invalid signature JSON: ") + e.what());
    }
}

}  // namespace graphdyn
