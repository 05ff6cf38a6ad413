#include "graphdyn/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace graphdyn {

Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::vector<std::uint32_t> words;
    words.reserve(2 * (path.size() + 1));
    auto push = [&](std::uint64_t x) {
        words.push_back(static_cast<std::uint32_t>(x));
        words.push_back(static_cast<std::uint32_t>(x >> 32));
    };
    push(seed);
    for (std::uint64_t p : path) push(p);
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Rejection on the largest multiple of bound that fits in 64 bits.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t population, std::uint64_t count) {
    if (count > population) {
        throw std::invalid_argument("sample_distinct: count exceeds population");
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count * 2);
    for (std::uint64_t j = population - count; j < population; ++j) {
        const std::uint64_t t = uniform_below(rng, j + 1);
        const std::uint64_t pick = chosen.contains(t) ? j : t;
        chosen.insert(pick);
        out.push_back(pick);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace graphdyn
