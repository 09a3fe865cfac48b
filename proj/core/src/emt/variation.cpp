#include "emtedge/emt/variation.hpp"

#include <algorithm>
#include <cmath>

#include "emtedge/emt/random.hpp"
#include "emtedge/errors.hpp"

namespace emtedge::emt {

namespace {

constexpr double kSbxEpsilon = 1.0e-14;

auto sbx_spread(double rand, double beta, double eta) -> double {
    double const alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    if (rand <= 1.0 / alpha) {
        return std::pow(rand * alpha, 1.0 / (eta + 1.0));
    }
    return std::pow(1.0 / (2.0 - rand * alpha), 1.0 / (eta + 1.0));
}

} // namespace

auto sbx_crossover(std::span<double const> first, std::span<double const> second, double distribution_index,
                   std::mt19937_64& rng) -> std::pair<Genome, Genome> {
    if (first.size() != second.size()) {
        throw ContractViolation("sbx_crossover: parents differ in length");
    }
    Genome c1(first.begin(), first.end());
    Genome c2(second.begin(), second.end());
    double const eta = distribution_index;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (uniform01(rng) > 0.5) {
            continue;
        }
        if (std::abs(first[i] - second[i]) <= kSbxEpsilon) {
            continue;
        }
        double const y1 = std::min(first[i], second[i]);
        double const y2 = std::max(first[i], second[i]);
        double const rand = uniform01(rng);

        double const low_q = sbx_spread(rand, 1.0 + 2.0 * y1 / (y2 - y1), eta);
        double const high_q = sbx_spread(rand, 1.0 + 2.0 * (1.0 - y2) / (y2 - y1), eta);
        double const a = std::clamp(0.5 * ((y1 + y2) - low_q * (y2 - y1)), 0.0, 1.0);
        double const b = std::clamp(0.5 * ((y1 + y2) + high_q * (y2 - y1)), 0.0, 1.0);
        if (uniform01(rng) <= 0.5) {
            c1[i] = b;
            c2[i] = a;
        } else {
            c1[i] = a;
            c2[i] = b;
        }
    }
    return {std::move(c1), std::move(c2)};
}

auto polynomial_mutation(std::span<double const> genome, double distribution_index, double probability,
                         std::mt19937_64& rng) -> Genome {
    Genome out(genome.begin(), genome.end());
    double const power = 1.0 / (distribution_index + 1.0);
    for (auto& y : out) {
        if (!(uniform01(rng) < probability)) {
            continue;
        }
        double const rnd = uniform01(rng);
        double delta = 0.0;
        if (rnd <= 0.5) {
            double const xy = 1.0 - y;
            double const val = 2.0 * rnd + (1.0 - 2.0 * rnd) * std::pow(xy, distribution_index + 1.0);
            delta = std::pow(val, power) - 1.0;
        } else {
            double const xy = y; // 1 - distance to the upper bound
            double const val = 2.0 * (1.0 - rnd) + 2.0 * (rnd - 0.5) * std::pow(xy, distribution_index + 1.0);
            delta = 1.0 - std::pow(val, power);
        }
        y = std::clamp(y + delta, 0.0, 1.0);
    }
    return out;
}

auto assortative_mating(Individual const& parent_a, Individual const& parent_b, VariationSettings const& settings,
                        std::mt19937_64& rng) -> std::pair<Offspring, Offspring> {
    double const rand = uniform01(rng);
    auto const ta = parent_a.skill_factor;
    auto const tb = parent_b.skill_factor;
    if (ta == tb || rand < settings.rmp) {
        auto [ga, gb] = sbx_crossover(parent_a.genome, parent_b.genome, settings.crossover_index, rng);
        Lineage const mixed = parent_a.lineage | parent_b.lineage;
        return {Offspring{std::move(ga), Provenance::crossover, ta, tb, mixed},
                Offspring{std::move(gb), Provenance::crossover, ta, tb, mixed}};
    }
    auto ga = polynomial_mutation(parent_a.genome, settings.mutation_index, settings.mutation_probability, rng);
    auto gb = polynomial_mutation(parent_b.genome, settings.mutation_index, settings.mutation_probability, rng);
    return {Offspring{std::move(ga), Provenance::mutation, ta, ta, parent_a.lineage},
            Offspring{std::move(gb), Provenance::mutation, tb, tb, parent_b.lineage}};
}

auto inherited_task(Offspring const& child, double draw) -> Task {
    if (child.provenance == Provenance::mutation) {
        return child.first_parent_task;
    }
    return draw < 0.5 ? child.first_parent_task : child.second_parent_task;
}

auto vertical_cultural_transmission(Offspring const& child, std::mt19937_64& rng) -> Task {
    if (child.provenance == Provenance::mutation) {
        return child.first_parent_task;
    }
    return inherited_task(child, uniform01(rng));
}

} // namespace emtedge::emt
