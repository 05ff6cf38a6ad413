#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace graphdyn {

using Rng = std::mt19937_64;

/// Independent stream for a (seed, path...) coordinate, e.g.
/// (master seed, transition, sample, centrality). The engine and the
/// seeding sequence are fully specified by the standard, so streams are
/// reproducible across platforms.
Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path = {});

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform real in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// `count` distinct values from [0, population), sorted ascending, each
/// subset equally likely (Floyd's algorithm).
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t population, std::uint64_t count);

}  // namespace graphdyn
