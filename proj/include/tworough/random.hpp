#pragma once

#include <cstdint>
#include <random>

namespace tworough {

// Independent random streams derived from one user seed. Each consumer
// (relation cells, subset draws, ...) gets its own stream tag so that
// changing how many subsets are drawn never shifts the relations.
enum class Stream : std::uint64_t {
    Relations = 0x52454c41ULL,
    Shapes = 0x53484150ULL,
    Subsets = 0x53554253ULL,
    Families = 0x46414d49ULL,
    IndexSets = 0x494e4458ULL,
    Classifications = 0x434c4153ULL,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed ^ static_cast<std::uint64_t>(stream)) + index);
}

// std::mt19937_64's output sequence is fixed by the standard, so streams
// are reproducible across platforms as long as only raw draws are used.
inline std::mt19937_64 make_engine(std::uint64_t seed, Stream stream, std::uint64_t index) {
    return std::mt19937_64(derive_seed(seed, stream, index));
}

// Uniform in [0, bound); bound > 0.
inline std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound) {
    return engine() % bound;
}

}  // namespace tworough
