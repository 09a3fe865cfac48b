#ifndef EMTEDGE_HARNESS_COMMANDS_HPP
#define EMTEDGE_HARNESS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "emtedge/harness/experiment.hpp"
#include "emtedge/model/generator.hpp"

namespace emtedge::harness {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitConfig = 2,
    kExitIo = 3,
};

struct GenOptions {
    model::GenConfig gen;
    std::uint64_t seed = 1;
    std::filesystem::path out = "instance.json";
};

struct CompareOptions {
    std::filesystem::path multitask;          // run directory or stats.json
    std::vector<std::filesystem::path> single; // one per single-task run
    std::optional<std::filesystem::path> out; // comparison CSV
};

// Each command reports on `out`, diagnostics on `err`, and returns an
// ExitCode. None of them throw.
auto cmd_gen(GenOptions const& options, std::ostream& out, std::ostream& err) -> int;
auto cmd_run(ExperimentConfig const& config, std::ostream& out, std::ostream& err) -> int;
auto cmd_compare(CompareOptions const& options, std::ostream& out, std::ostream& err) -> int;
// Accepts an instance file, a report/stats JSON, or a run directory.
auto cmd_validate(std::filesystem::path const& path, std::ostream& out, std::ostream& err) -> int;

// Names of the files cmd_run writes into the output directory.
inline constexpr char const* kInstanceFile = "instance.json";
inline constexpr char const* kStatsCsv = "stats.csv";
inline constexpr char const* kStatsJson = "stats.json";
inline constexpr char const* kConvergenceCsv = "convergence.csv";
inline constexpr char const* kBoxplotCsv = "boxplot.csv";

[[nodiscard]] auto rep_file_name(std::size_t rep) -> std::string;

} // namespace emtedge::harness

#endif // EMTEDGE_HARNESS_COMMANDS_HPP
