#include "emtedge/emt/random.hpp"

namespace emtedge::emt {

auto make_stream(std::uint64_t seed, std::uint64_t generation, StreamPurpose purpose, std::uint64_t index)
    -> std::mt19937_64 {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32U); };
    std::seed_seq seq{lo(seed),          hi(seed), lo(generation), hi(generation), static_cast<std::uint32_t>(purpose),
                      lo(index),         hi(index)};
    return std::mt19937_64(seq);
}

} // namespace emtedge::emt
