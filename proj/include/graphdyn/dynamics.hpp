#pragma once

#include "graphdyn/centrality.hpp"
#include "graphdyn/graph.hpp"
#include "graphdyn/random.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphdyn {

/// How sample graphs H_i are drawn around G_t.
enum class NullModelKind {
    /// Toggle R distinct uniformly chosen vertex pairs.
    Uniform,
    /// Add and remove edges so that H_i also has |E_{t+1}| edges.
    DegreePreserving,
};

std::string_view to_string(NullModelKind kind);
/// Accepts "uniform" and "degree".
std::optional<NullModelKind> parse_null_model(std::string_view text);

struct SamplerConfig {
    std::size_t k = 100;
    std::uint64_t seed = 0;
    NullModelKind null_model = NullModelKind::Uniform;
    /// Worker threads; 0 picks the hardware concurrency. Results do not
    /// depend on this value.
    unsigned threads = 0;

    /// Throws std::invalid_argument when k < 2.
    void validate() const;
};

/// Everything measured about one step G_t -> G_{t+1} for one centrality.
struct TransitionAnalysis {
    std::size_t t = 0;
    std::uint64_t radius = 0;
    CentralityKind centrality = CentralityKind::DC;
    double measured = 0.0;
    std::vector<double> sample_distances;
    double mean = 0.0;
    /// Population standard deviation of sample_distances.
    double std_dev = 0.0;
    bool outlier = false;

    double median() const;
    double lower2s() const { return mean - 2.0 * std_dev; }
    double upper2s() const { return mean + 2.0 * std_dev; }

    bool operator==(const TransitionAnalysis&) const = default;
};

struct SignatureEntry {
    CentralityKind centrality = CentralityKind::DC;
    double p = 0.0;
    std::size_t outliers = 0;
    std::size_t transitions_considered = 0;

    bool operator==(const SignatureEntry&) const = default;
};

/// Outlier fraction per centrality for a whole trace.
struct DynamicSignature {
    std::string trace_name;
    std::vector<SignatureEntry> entries;

    const SignatureEntry* find(CentralityKind kind) const;
    bool operator==(const DynamicSignature&) const = default;
};

/// g with exactly `radius` distinct vertex pairs toggled, chosen uniformly
/// without replacement. Throws DataError if radius exceeds the pair count.
Snapshot sample_uniform(const Snapshot& g, std::uint64_t radius, Rng& rng);

/// g_t with a = (R+Δ)/2 absent pairs added and r = (R−Δ)/2 edges removed,
/// where R = ged(g_t, g_next) and Δ = |E_next| − |E_t|. The result is at
/// edit distance R from g_t and has g_next's edge count.
Snapshot sample_degree_preserving(const Snapshot& g_t, const Snapshot& g_next, Rng& rng);

struct SampleMoments {
    double mean = 0.0;
    double std_dev = 0.0;
};

/// Mean and population standard deviation. Throws std::invalid_argument
/// on fewer than 2 values.
SampleMoments moments(std::span<const double> values);

/// |measured − μ| > 2σ over the samples (strict).
bool is_outlier(double measured, std::span<const double> samples);

/// Throws DataError when g_t == g_next (radius 0) or the universes differ.
/// `t` selects the random substreams and is echoed in the result.
TransitionAnalysis analyze_transition(const Snapshot& g_t, const Snapshot& g_next, CentralityKind kind,
                                      const SamplerConfig& cfg, const PagerankConfig& pcfg = {},
                                      std::size_t t = 0);

/// analyze_transition over every consecutive pair with radius >= 1, in
/// trace order.
std::vector<TransitionAnalysis> analyze_trace(const Trace& trace, CentralityKind kind,
                                              const SamplerConfig& cfg, const PagerankConfig& pcfg = {});

/// p per centrality: outlier transitions over transitions with radius >= 1.
/// Throws DataError for traces shorter than 2 or without any change.
DynamicSignature signature(const Trace& trace, std::span<const CentralityKind> kinds,
                           const SamplerConfig& cfg, const PagerankConfig& pcfg = {},
                           std::string trace_name = {});

}  // namespace graphdyn
