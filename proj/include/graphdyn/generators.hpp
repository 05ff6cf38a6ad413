#pragma once

#include "graphdyn/graph.hpp"
#include "graphdyn/random.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

namespace graphdyn {

enum class GeneratorModel { ER, RR, BA, CMHALF, CMLOG };

std::string_view to_string(GeneratorModel model);
/// Accepts the lowercase or uppercase model name.
std::optional<GeneratorModel> parse_generator_model(std::string_view text);

struct GeneratorConfig {
    GeneratorModel model = GeneratorModel::ER;
    /// Vertex count (ER, RR) or target vertex count (BA, CMHALF, CMLOG).
    std::size_t n = 0;
    /// Degree of the random regular graph.
    std::size_t d = 0;
    /// Edges attached by each arriving BA vertex.
    std::size_t m = 1;
    /// Number of edge events. When unset: n events for ER, n*d/2 for RR,
    /// and for the growth models as many as it takes to reach n vertices.
    std::optional<std::size_t> steps;
    std::uint64_t seed = 0;
    std::size_t rr_restart_budget = 100;
    /// CMLOG probability of a node event at event t; defaults to 1/log2(t+2).
    std::function<double(std::size_t)> node_event_probability;

    /// Throws std::invalid_argument on an invalid combination.
    void validate() const;
};

/// Synthetic growing trace: snapshot 0 is the seed graph (empty for ER/RR,
/// a single edge otherwise) and every later snapshot adds exactly one edge.
/// All snapshots share the final vertex universe {0, ..., V-1}.
Trace generate(const GeneratorConfig& cfg);

/// Index drawn with probability proportional to degrees[i]; uniform when
/// every degree is zero. degrees must be non-empty.
std::size_t preferential_pick(std::span<const std::size_t> degrees, Rng& rng);

}  // namespace graphdyn
