#ifndef EMTEDGE_EMT_VARIATION_HPP
#define EMTEDGE_EMT_VARIATION_HPP

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "emtedge/individual.hpp"

namespace emtedge::emt {

using Genome = std::vector<double>;

// Bounded simulated binary crossover on [0, 1]. Each gene pair is blended
// with probability 0.5; nearly equal genes are copied unchanged.
[[nodiscard]] auto sbx_crossover(std::span<double const> first, std::span<double const> second,
                                 double distribution_index, std::mt19937_64& rng) -> std::pair<Genome, Genome>;

// Bounded polynomial mutation on [0, 1], each gene mutated with
// `probability`.
[[nodiscard]] auto polynomial_mutation(std::span<double const> genome, double distribution_index, double probability,
                                       std::mt19937_64& rng) -> Genome;

enum class Provenance { crossover, mutation };

// Child of assortative mating, before its skill factor is decided.
struct Offspring {
    Genome genome;
    Provenance provenance = Provenance::crossover;
    // Mutation children know only the parent in `first`.
    Task first_parent_task = Task::deployment;
    Task second_parent_task = Task::deployment;
    Lineage lineage = 0;
};

struct VariationSettings {
    double rmp = 0.3;
    double crossover_index = 20.0;
    double mutation_index = 20.0;
    double mutation_probability = 0.01;
};

// Crossover when both parents share a skill factor or rand < rmp, otherwise
// one mutant per parent. Children do not have a skill factor yet.
[[nodiscard]] auto assortative_mating(Individual const& parent_a, Individual const& parent_b,
                                      VariationSettings const& settings, std::mt19937_64& rng)
    -> std::pair<Offspring, Offspring>;

// Crossover children take either parent's task with equal odds; mutation
// children take their sole parent's task.
[[nodiscard]] auto vertical_cultural_transmission(Offspring const& child, std::mt19937_64& rng) -> Task;

// Same rule with the random draw supplied.
[[nodiscard]] auto inherited_task(Offspring const& child, double draw) -> Task;

} // namespace emtedge::emt

#endif // EMTEDGE_EMT_VARIATION_HPP
