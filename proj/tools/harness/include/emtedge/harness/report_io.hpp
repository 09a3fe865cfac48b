#ifndef EMTEDGE_HARNESS_REPORT_IO_HPP
#define EMTEDGE_HARNESS_REPORT_IO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "emtedge/emt/mfea.hpp"

namespace emtedge::harness {

inline constexpr int kReportSchemaVersion = 1;

[[nodiscard]] auto fingerprint_hex(std::uint64_t fingerprint) -> std::string;

// Per-repetition report. Objective values are written in reported
// orientation (reliability positive, "maximize"); wall time is left out so
// reruns are byte-identical.
[[nodiscard]] auto report_to_json(emt::RunReport const& report, std::uint64_t instance_fingerprint)
    -> nlohmann::ordered_json;

// Optimum / worst / mean over repetitions of each repetition's best final
// archive value, in reported orientation.
struct StatsRow {
    Task task = Task::deployment;
    std::size_t objective = 0;
    double optimum = 0.0;
    double worst = 0.0;
    double mean = 0.0;

    friend auto operator==(StatsRow const&, StatsRow const&) -> bool = default;
};

struct StatsTable {
    emt::RunMode mode = emt::RunMode::multitask;
    std::string instance_fingerprint;
    std::size_t population_size = 0;
    std::size_t generations = 0;
    std::size_t repetitions = 0;
    std::vector<StatsRow> rows;
};

[[nodiscard]] auto aggregate(std::span<emt::RunReport const> reports, std::uint64_t instance_fingerprint)
    -> StatsTable;

[[nodiscard]] auto stats_csv(StatsTable const& table) -> std::string;
[[nodiscard]] auto stats_to_json(StatsTable const& table) -> nlohmann::ordered_json;
// Throws ParseError.
[[nodiscard]] auto stats_from_json(nlohmann::json const& doc) -> StatsTable;

// generation,task,objective,statistic,value; the value is the mean over
// repetitions of the archive's best or mean at that generation.
[[nodiscard]] auto convergence_csv(std::span<emt::RunReport const> reports) -> std::string;

// rep,task,objective,value for every final archive member.
[[nodiscard]] auto boxplot_csv(std::span<emt::RunReport const> reports) -> std::string;

// Internal-consistency checks; each returns the list of violations.
[[nodiscard]] auto check_report_json(nlohmann::json const& doc) -> std::vector<std::string>;
[[nodiscard]] auto check_stats_json(nlohmann::json const& doc) -> std::vector<std::string>;

// Shortest round-trip text for a double.
[[nodiscard]] auto format_number(double value) -> std::string;

} // namespace emtedge::harness

#endif // EMTEDGE_HARNESS_REPORT_IO_HPP
