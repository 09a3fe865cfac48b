#include "emtedge/harness/experiment.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <string>
#include <utility>

#include "emtedge/errors.hpp"
#include "emtedge/model/instance_io.hpp"
#include "emtedge/parallel.hpp"

namespace emtedge::harness {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

using model::GenConfig;
using model::Range;

constexpr std::array kGenCounts{
    std::pair{"edge_clouds", &GenConfig::edge_clouds},
    std::pair{"users", &GenConfig::users},
    std::pair{"terminals", &GenConfig::terminals},
    std::pair{"base_stations", &GenConfig::base_stations},
    std::pair{"subtasks_per_terminal", &GenConfig::subtasks_per_terminal},
};

constexpr std::array kGenRanges{
    std::pair{"server_cpu", &GenConfig::server_cpu},
    std::pair{"local_speed", &GenConfig::local_speed},
    std::pair{"transmit_rate", &GenConfig::transmit_rate},
    std::pair{"local_power", &GenConfig::local_power},
    std::pair{"local_cycles", &GenConfig::local_cycles},
    std::pair{"edge_cycles", &GenConfig::edge_cycles},
    std::pair{"data_bits", &GenConfig::data_bits},
    std::pair{"coverage_radius", &GenConfig::coverage_radius},
    std::pair{"capacity", &GenConfig::capacity},
    std::pair{"service_requirement", &GenConfig::service_requirement},
    std::pair{"compute_demand", &GenConfig::compute_demand},
    std::pair{"energy_per_service", &GenConfig::energy_per_service},
    std::pair{"price_per_second", &GenConfig::price_per_second},
    std::pair{"transport_cost", &GenConfig::transport_cost},
    std::pair{"latency_jitter", &GenConfig::latency_jitter},
};

constexpr std::array kGenScalars{
    std::pair{"box_size", &GenConfig::box_size},
    std::pair{"propagation_speed", &GenConfig::propagation_speed},
    std::pair{"fixed_cost", &GenConfig::fixed_cost},
    std::pair{"line_cost", &GenConfig::line_cost},
    std::pair{"edge_power", &GenConfig::edge_power},
};

template <typename T>
auto read(json const& doc, char const* key, char const* where) -> T {
    try {
        return doc.at(key).get<T>();
    } catch (json::exception const& e) {
        throw ConfigError(std::string(where) + "." + key + ": " + e.what());
    }
}

void expect_object(json const& doc, char const* where) {
    if (!doc.is_object()) {
        throw ConfigError(std::string(where) + " must be a JSON object");
    }
}

} // namespace

void validate(ExperimentConfig const& c) {
    if (c.repetitions < 1) {
        throw ConfigError("repetitions must be at least 1");
    }
    emt::validate(c.mfea);
    if (!c.instance_path) {
        model::validate(c.gen);
    }
}

auto to_json(GenConfig const& gen) -> ordered_json {
    ordered_json o;
    for (auto const& [name, member] : kGenCounts) {
        o[name] = gen.*member;
    }
    for (auto const& [name, member] : kGenScalars) {
        o[name] = gen.*member;
    }
    for (auto const& [name, member] : kGenRanges) {
        o[name] = ordered_json::array({(gen.*member).lo, (gen.*member).hi});
    }
    return o;
}

void merge_json(json const& doc, GenConfig& gen) {
    expect_object(doc, "gen");
    for (auto const& [name, member] : kGenCounts) {
        if (doc.contains(name)) {
            gen.*member = read<std::size_t>(doc, name, "gen");
        }
    }
    for (auto const& [name, member] : kGenScalars) {
        if (doc.contains(name)) {
            gen.*member = read<double>(doc, name, "gen");
        }
    }
    for (auto const& [name, member] : kGenRanges) {
        if (!doc.contains(name)) {
            continue;
        }
        auto const& v = doc.at(name);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            throw ConfigError(std::string("gen.") + name + " must be [lo, hi]");
        }
        gen.*member = Range{v[0].get<double>(), v[1].get<double>()};
    }
}

auto to_json(emt::MfeaConfig const& m) -> ordered_json {
    ordered_json o;
    o["population_size"] = m.population_size;
    o["generations"] = m.generations;
    o["rmp"] = m.rmp;
    o["crossover_index"] = m.crossover_index;
    o["mutation_index"] = m.mutation_index;
    o["mutation_probability"] = m.mutation_probability ? ordered_json(*m.mutation_probability) : ordered_json();
    o["grid_divisions"] = m.grid_divisions;
    o["seed"] = m.seed;
    return o;
}

void merge_json(json const& doc, emt::MfeaConfig& m) {
    expect_object(doc, "mfea");
    if (doc.contains("population_size")) m.population_size = read<std::size_t>(doc, "population_size", "mfea");
    if (doc.contains("generations")) m.generations = read<std::size_t>(doc, "generations", "mfea");
    if (doc.contains("rmp")) m.rmp = read<double>(doc, "rmp", "mfea");
    if (doc.contains("crossover_index")) m.crossover_index = read<double>(doc, "crossover_index", "mfea");
    if (doc.contains("mutation_index")) m.mutation_index = read<double>(doc, "mutation_index", "mfea");
    if (doc.contains("mutation_probability")) {
        auto const& v = doc.at("mutation_probability");
        if (v.is_null()) {
            m.mutation_probability.reset();
        } else {
            m.mutation_probability = read<double>(doc, "mutation_probability", "mfea");
        }
    }
    if (doc.contains("grid_divisions")) m.grid_divisions = read<std::size_t>(doc, "grid_divisions", "mfea");
    if (doc.contains("seed")) m.seed = read<std::uint64_t>(doc, "seed", "mfea");
    if (doc.contains("workers")) m.workers = read<unsigned>(doc, "workers", "mfea");
}

auto to_json(ExperimentConfig const& c) -> ordered_json {
    ordered_json o;
    o["instance"] = c.instance_path ? ordered_json(c.instance_path->string()) : ordered_json();
    o["gen"] = to_json(c.gen);
    o["instance_seed"] = c.instance_seed;
    o["mfea"] = to_json(c.mfea);
    o["repetitions"] = c.repetitions;
    o["mode"] = std::string(emt::to_string(c.mode));
    o["output_dir"] = c.output_dir.string();
    return o;
}

void merge_json(json const& doc, ExperimentConfig& c) {
    expect_object(doc, "config");
    if (doc.contains("instance")) {
        auto const& v = doc.at("instance");
        if (v.is_null()) {
            c.instance_path.reset();
        } else {
            c.instance_path = read<std::string>(doc, "instance", "config");
        }
    }
    if (doc.contains("gen")) merge_json(doc.at("gen"), c.gen);
    if (doc.contains("instance_seed")) c.instance_seed = read<std::uint64_t>(doc, "instance_seed", "config");
    if (doc.contains("mfea")) merge_json(doc.at("mfea"), c.mfea);
    if (doc.contains("repetitions")) c.repetitions = read<std::size_t>(doc, "repetitions", "config");
    if (doc.contains("mode")) c.mode = emt::parse_run_mode(read<std::string>(doc, "mode", "config"));
    if (doc.contains("output_dir")) c.output_dir = read<std::string>(doc, "output_dir", "config");
}

auto load_experiment_config(std::filesystem::path const& path) -> ExperimentConfig {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open config '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (json::parse_error const& e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    ExperimentConfig c;
    merge_json(doc, c);
    return c;
}

auto resolve_instance(ExperimentConfig const& config) -> model::EdgeInstance {
    if (config.instance_path) {
        return model::load_instance(*config.instance_path);
    }
    return model::generate_instance(config.gen, config.instance_seed);
}

auto run_experiment(ExperimentConfig const& config) -> ExperimentResult {
    validate(config);
    ExperimentResult result;
    result.instance = resolve_instance(config);
    result.reports.resize(config.repetitions);

    auto const workers = std::max(1U, config.mfea.workers);
    bool const across_reps = config.repetitions > 1;
    parallel_for(config.repetitions, across_reps ? workers : 1U, [&](std::size_t rep) {
        auto mfea = config.mfea;
        mfea.seed = config.mfea.seed + rep;
        mfea.workers = across_reps ? 1U : workers;
        result.reports[rep] = emt::run_momfea_ms(mfea, result.instance, config.mode);
    });
    return result;
}

} // namespace emtedge::harness
