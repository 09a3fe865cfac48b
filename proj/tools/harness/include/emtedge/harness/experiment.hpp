#ifndef EMTEDGE_HARNESS_EXPERIMENT_HPP
#define EMTEDGE_HARNESS_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "emtedge/emt/config.hpp"
#include "emtedge/emt/mfea.hpp"
#include "emtedge/model/generator.hpp"
#include "emtedge/model/instance.hpp"

namespace emtedge::harness {

struct ExperimentConfig {
    // Either an instance file, or a generator setting plus its seed.
    std::optional<std::filesystem::path> instance_path;
    model::GenConfig gen;
    std::uint64_t instance_seed = 1;

    emt::MfeaConfig mfea;
    std::size_t repetitions = 20;
    emt::RunMode mode = emt::RunMode::multitask;
    std::filesystem::path output_dir = "results";
};

// Throws ConfigError.
void validate(ExperimentConfig const& config);

[[nodiscard]] auto to_json(model::GenConfig const& gen) -> nlohmann::ordered_json;
// Fields absent from `doc` keep the value already in `gen`.
void merge_json(nlohmann::json const& doc, model::GenConfig& gen);

[[nodiscard]] auto to_json(emt::MfeaConfig const& mfea) -> nlohmann::ordered_json;
void merge_json(nlohmann::json const& doc, emt::MfeaConfig& mfea);

[[nodiscard]] auto to_json(ExperimentConfig const& config) -> nlohmann::ordered_json;
void merge_json(nlohmann::json const& doc, ExperimentConfig& config);

// Reads a JSON experiment document over the defaults. Throws ConfigError on
// bad content, std::ios_base::failure if unreadable.
[[nodiscard]] auto load_experiment_config(std::filesystem::path const& path) -> ExperimentConfig;

struct ExperimentResult {
    model::EdgeInstance instance;
    std::vector<emt::RunReport> reports; // rep order
};

// Repetition r runs with seed mfea.seed + r. Repetitions are spread over
// mfea.workers threads; the result does not depend on the thread count.
[[nodiscard]] auto run_experiment(ExperimentConfig const& config) -> ExperimentResult;

[[nodiscard]] auto resolve_instance(ExperimentConfig const& config) -> model::EdgeInstance;

} // namespace emtedge::harness

#endif // EMTEDGE_HARNESS_EXPERIMENT_HPP
