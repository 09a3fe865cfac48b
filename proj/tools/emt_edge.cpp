#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "emtedge/errors.hpp"
#include "emtedge/harness/commands.hpp"

namespace {

using namespace emtedge;
using namespace emtedge::harness;

struct CountFlags {
    std::size_t clouds = 0;
    std::size_t users = 0;
    std::size_t terminals = 0;
    std::size_t stations = 0;
    std::size_t subtasks = 0;
    std::vector<CLI::Option*> options;

    void attach(CLI::App* cmd) {
        options = {
            cmd->add_option("--clouds", clouds, "number of edge clouds"),
            cmd->add_option("--users", users, "number of users"),
            cmd->add_option("--terminals", terminals, "number of mobile terminals"),
            cmd->add_option("--stations", stations, "number of base stations"),
            cmd->add_option("--subtasks", subtasks, "subtasks per terminal"),
        };
    }

    void apply(model::GenConfig& gen) const {
        std::size_t model::GenConfig::*const fields[] = {
            &model::GenConfig::edge_clouds, &model::GenConfig::users, &model::GenConfig::terminals,
            &model::GenConfig::base_stations, &model::GenConfig::subtasks_per_terminal};
        std::size_t const values[] = {clouds, users, terminals, stations, subtasks};
        for (std::size_t i = 0; i < options.size(); ++i) {
            if (options[i]->count() > 0) {
                gen.*fields[i] = values[i];
            }
        }
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multitask evolutionary scheduling for edge service deployment and task offloading"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance file");
    std::uint64_t gen_seed = 1;
    std::string gen_out = "instance.json";
    std::string gen_config;
    CountFlags gen_counts;
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output instance file");
    gen_cmd->add_option("--config", gen_config, "JSON experiment config; its \"gen\" section is used");
    gen_counts.attach(gen_cmd);

    // run
    auto* run_cmd = app.add_subcommand("run", "run repeated seeded experiments");
    std::string run_config;
    std::string run_instance;
    std::uint64_t run_seed = 0;
    std::uint64_t run_instance_seed = 0;
    std::size_t run_pop = 0;
    std::size_t run_gens = 0;
    double run_rmp = 0.0;
    std::size_t run_reps = 0;
    std::string run_mode;
    std::string run_out;
    unsigned run_workers = 0;
    std::size_t run_div = 0;
    CountFlags run_counts;
    run_cmd->add_option("--config", run_config, "JSON experiment config; flags override it");
    auto* o_instance = run_cmd->add_option("--instance", run_instance, "instance file (default: generate one)");
    auto* o_seed = run_cmd->add_option("--seed", run_seed, "base seed; repetition r uses seed + r");
    auto* o_iseed = run_cmd->add_option("--instance-seed", run_instance_seed, "seed for a generated instance");
    auto* o_pop = run_cmd->add_option("--pop", run_pop, "population size N (even)");
    auto* o_gens = run_cmd->add_option("--gens", run_gens, "generations G");
    auto* o_rmp = run_cmd->add_option("--rmp", run_rmp, "random mating probability");
    auto* o_reps = run_cmd->add_option("--reps", run_reps, "repetitions R");
    auto* o_mode = run_cmd->add_option("--mode", run_mode, "multitask | singletask-T1 | singletask-T2");
    auto* o_out = run_cmd->add_option("--out", run_out, "output directory");
    auto* o_workers = run_cmd->add_option("--workers", run_workers, "worker threads");
    auto* o_div = run_cmd->add_option("--div", run_div, "grid divisions per objective");
    run_counts.attach(run_cmd);

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "compare a multitask run with single-task runs");
    std::string cmp_multi;
    std::vector<std::string> cmp_single;
    std::string cmp_out;
    cmp_cmd->add_option("--multitask", cmp_multi, "multitask run directory or stats.json")->required();
    cmp_cmd->add_option("--single", cmp_single, "single-task run directory or stats.json")->required();
    auto* o_cmp_out = cmp_cmd->add_option("--out", cmp_out, "comparison CSV (default: stdout)");

    // validate
    auto* val_cmd = app.add_subcommand("validate", "check an instance, report, stats file or run directory");
    std::string val_path;
    val_cmd->add_option("path", val_path, "file or directory")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*gen_cmd) {
            GenOptions options;
            if (!gen_config.empty()) {
                options.gen = load_experiment_config(gen_config).gen;
            }
            gen_counts.apply(options.gen);
            options.seed = gen_seed;
            options.out = gen_out;
            return cmd_gen(options, std::cout, std::cerr);
        }
        if (*run_cmd) {
            ExperimentConfig config;
            if (!run_config.empty()) {
                config = load_experiment_config(run_config);
            }
            if (o_instance->count()) config.instance_path = run_instance;
            if (o_seed->count()) config.mfea.seed = run_seed;
            if (o_iseed->count()) config.instance_seed = run_instance_seed;
            if (o_pop->count()) config.mfea.population_size = run_pop;
            if (o_gens->count()) config.mfea.generations = run_gens;
            if (o_rmp->count()) config.mfea.rmp = run_rmp;
            if (o_reps->count()) config.repetitions = run_reps;
            if (o_mode->count()) config.mode = emt::parse_run_mode(run_mode);
            if (o_out->count()) config.output_dir = run_out;
            if (o_workers->count()) config.mfea.workers = run_workers;
            if (o_div->count()) config.mfea.grid_divisions = run_div;
            run_counts.apply(config.gen);
            return cmd_run(config, std::cout, std::cerr);
        }
        if (*cmp_cmd) {
            CompareOptions options;
            options.multitask = cmp_multi;
            options.single.assign(cmp_single.begin(), cmp_single.end());
            if (o_cmp_out->count()) options.out = cmp_out;
            return cmd_compare(options, std::cout, std::cerr);
        }
        if (*val_cmd) {
            return cmd_validate(val_path, std::cout, std::cerr);
        }
    } catch (ConfigError const& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (std::ios_base::failure const& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitConfig;
}
