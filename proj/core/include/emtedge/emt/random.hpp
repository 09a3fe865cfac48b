#ifndef EMTEDGE_EMT_RANDOM_HPP
#define EMTEDGE_EMT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace emtedge::emt {

// What a random stream is used for; part of the stream key.
enum class StreamPurpose : std::uint32_t {
    initialization = 1,
    mating = 2,
    variation = 3,
    selection = 4,
    refill = 5,
};

// Independent engine for (seed, generation, purpose, index). Streams never
// depend on scheduling, so results are the same for any worker count.
[[nodiscard]] auto make_stream(std::uint64_t seed, std::uint64_t generation, StreamPurpose purpose,
                               std::uint64_t index = 0) -> std::mt19937_64;

[[nodiscard]] inline auto uniform01(std::mt19937_64& rng) -> double {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace emtedge::emt

#endif // EMTEDGE_EMT_RANDOM_HPP
