#pragma once

#include <cstdint>
#include <random>

namespace commitverb::detail {

/// Uniform integer in [0, bound) by rejection sampling. Unlike
/// std::uniform_int_distribution the sequence is identical across
/// standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace commitverb::detail
