#include "emtedge/emt/mfea.hpp"

#include <algorithm>
#include <chrono>

#include "emtedge/emt/decode.hpp"
#include "emtedge/emt/random.hpp"
#include "emtedge/emt/variation.hpp"
#include "emtedge/model/instance.hpp"
#include "emtedge/parallel.hpp"
#include "emtedge/selection/environment.hpp"

namespace emtedge::emt {

auto summarize(std::span<Individual const> members) -> std::optional<ObjectiveStats> {
    if (members.empty()) {
        return std::nullopt;
    }
    ObjectiveStats s;
    s.best = members.front().objectives;
    s.worst = members.front().objectives;
    ObjectiveVector sum{};
    for (auto const& m : members) {
        for (std::size_t k = 0; k < kObjectiveCount; ++k) {
            s.best[k] = std::min(s.best[k], m.objectives[k]);
            s.worst[k] = std::max(s.worst[k], m.objectives[k]);
            sum[k] += m.objectives[k];
        }
    }
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        // Clamp absorbs rounding when all values coincide.
        s.mean[k] = std::clamp(sum[k] / static_cast<double>(members.size()), s.best[k], s.worst[k]);
    }
    return s;
}

void assign_factorial_ranks(std::span<Individual> population) {
    for (std::size_t t = 0; t < kTaskCount; ++t) {
        auto const task = task_from_index(t);
        std::vector<std::size_t> holders;
        selection::ObjectiveMatrix objs;
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (population[i].skill_factor == task) {
                holders.push_back(i);
                objs.append(population[i].objectives);
            }
        }
        auto const order = selection::front_sde_order(objs);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            auto& ind = population[holders[order[pos]]];
            ind.factorial_rank.fill(std::nullopt);
            ind.factorial_rank[t] = pos + 1;
            ind.scalar_fitness = 1.0 / static_cast<double>(pos + 1);
        }
    }
}

namespace {

auto random_genome(std::size_t dimension, std::mt19937_64& rng) -> std::vector<double> {
    std::vector<double> g(dimension);
    for (auto& x : g) {
        x = uniform01(rng);
    }
    return g;
}

void evaluate_all(std::span<Individual> group, model::EdgeInstance const& instance, unsigned workers) {
    parallel_for(group.size(), workers, [&](std::size_t i) { evaluate(group[i], instance); });
}

void apply_sentinels(std::span<Individual> group, std::span<Task const> tasks) {
    for (auto t : tasks) {
        apply_infeasible_sentinel(group, t);
    }
}

} // namespace

auto initialize_population(MfeaConfig const& config, model::EdgeInstance const& instance, RunMode mode)
    -> std::vector<Individual> {
    validate(config);
    auto const tasks = active_tasks(mode);
    auto const dimension = unified_dimension(instance);
    auto rng = make_stream(config.seed, 0, StreamPurpose::initialization);

    std::vector<Individual> population(config.population_size);
    for (std::size_t i = 0; i < population.size(); ++i) {
        auto& ind = population[i];
        ind.genome = random_genome(dimension, rng);
        ind.skill_factor = tasks[i % tasks.size()];
        ind.lineage = lineage_of(ind.skill_factor);
    }
    evaluate_all(population, instance, config.workers);
    apply_sentinels(population, tasks);
    assign_factorial_ranks(population);
    return population;
}

auto tournament_pick(std::span<Individual const> population, std::mt19937_64& rng) -> std::size_t {
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    auto const a = pick(rng);
    auto const b = pick(rng);
    if (population[a].scalar_fitness != population[b].scalar_fitness) {
        return population[a].scalar_fitness > population[b].scalar_fitness ? a : b;
    }
    return std::bernoulli_distribution(0.5)(rng) ? a : b;
}

auto run_momfea_ms(MfeaConfig const& config, model::EdgeInstance const& instance, RunMode mode,
                   GenerationObserver const& observer) -> RunReport {
    auto const started = std::chrono::steady_clock::now();
    validate(config);
    model::validate(instance);

    auto const tasks = active_tasks(mode);
    auto const n = config.population_size;
    auto const dimension = unified_dimension(instance);
    VariationSettings const variation{config.rmp, config.crossover_index, config.mutation_index,
                                      config.mutation_probability.value_or(1.0 / static_cast<double>(dimension))};
    selection::EnvironmentSettings const env{config.grid_divisions};

    auto population = initialize_population(config, instance, mode);
    selection::Archives archives{selection::Archive(n), selection::Archive(n)};
    for (auto t : tasks) {
        std::vector<Individual> holders;
        std::copy_if(population.begin(), population.end(), std::back_inserter(holders),
                     [t](Individual const& ind) { return ind.skill_factor == t; });
        archives[task_index(t)].update(holders);
    }

    std::uint64_t refills = 0;
    selection::FreshIndividual fresh = [&](Task t) {
        auto rng = make_stream(config.seed, 0, StreamPurpose::refill, refills++);
        Individual ind;
        ind.genome = random_genome(dimension, rng);
        ind.skill_factor = t;
        ind.lineage = lineage_of(t);
        evaluate(ind, instance);
        return ind;
    };

    RunReport report;
    report.config = config;
    report.mode = mode;
    report.history.reserve(config.generations);

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        auto mating = make_stream(config.seed, gen, StreamPurpose::mating);
        std::vector<std::pair<std::size_t, std::size_t>> pairs(n / 2);
        for (auto& [a, b] : pairs) {
            a = tournament_pick(population, mating);
            b = tournament_pick(population, mating);
        }

        std::vector<Individual> offspring(n);
        std::size_t cross_task = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto const& pa = population[pairs[p].first];
            auto const& pb = population[pairs[p].second];
            auto rng = make_stream(config.seed, gen, StreamPurpose::variation, p);
            auto [ca, cb] = assortative_mating(pa, pb, variation, rng);
            if (ca.provenance == Provenance::crossover && pa.skill_factor != pb.skill_factor) {
                ++cross_task;
            }
            std::size_t slot = 2 * p;
            for (auto* child : {&ca, &cb}) {
                auto& ind = offspring[slot++];
                ind.skill_factor = vertical_cultural_transmission(*child, rng);
                ind.genome = std::move(child->genome);
                ind.lineage = child->lineage;
            }
        }
        evaluate_all(offspring, instance, config.workers);

        std::vector<Individual> merged;
        merged.reserve(2 * n);
        std::move(population.begin(), population.end(), std::back_inserter(merged));
        std::move(offspring.begin(), offspring.end(), std::back_inserter(merged));
        apply_sentinels(merged, tasks);

        auto selection_rng = make_stream(config.seed, gen, StreamPurpose::selection);
        population = selection::environment_selection(merged, n, tasks, archives, selection_rng, fresh, env);
        apply_sentinels(population, tasks);
        assign_factorial_ranks(population);

        GenerationRecord record;
        record.generation = gen;
        record.cross_task_crossovers = cross_task;
        for (auto t : tasks) {
            record.archive[task_index(t)] = summarize(archives[task_index(t)].members());
        }
        report.history.push_back(record);

        if (observer) {
            observer(GenerationView{gen, population, archives, cross_task});
        }
    }

    for (std::size_t t = 0; t < kTaskCount; ++t) {
        report.archives[t] = archives[t].members();
    }
    report.population = std::move(population);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace emtedge::emt
