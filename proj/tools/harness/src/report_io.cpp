#include "emtedge/harness/report_io.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include <fmt/format.h>

#include "emtedge/errors.hpp"
#include "emtedge/harness/experiment.hpp"
#include "emtedge/selection/dominance.hpp"
#include "emtedge/selection/objective_matrix.hpp"

namespace emtedge::harness {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

auto displayed(Task task, ObjectiveVector const& internal) -> ordered_json {
    auto out = ordered_json::array();
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        out.push_back(display_value(task, k, internal[k]));
    }
    return out;
}

auto stats_json(Task task, emt::ObjectiveStats const& s) -> ordered_json {
    ordered_json o;
    o["best"] = displayed(task, s.best);
    o["worst"] = displayed(task, s.worst);
    o["mean"] = displayed(task, s.mean);
    return o;
}

auto direction_name(Direction d) -> char const* { return d == Direction::maximize ? "maximize" : "minimize"; }

auto task_from_number(int number) -> std::optional<Task> {
    if (number == 1 || number == 2) {
        return task_from_index(static_cast<std::size_t>(number - 1));
    }
    return std::nullopt;
}

auto objective_index(Task task, std::string const& name) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        if (objective_info(task, k).name == name) {
            return k;
        }
    }
    return std::nullopt;
}

// Best displayed value of objective k over an archive.
auto archive_best(Task task, std::size_t k, std::vector<Individual> const& members) -> std::optional<double> {
    std::optional<double> best;
    for (auto const& m : members) {
        double const v = m.objectives[k];
        if (!best || v < *best) {
            best = v;
        }
    }
    if (best) {
        return display_value(task, k, *best);
    }
    return std::nullopt;
}

// optimum / mean / worst ordering in displayed orientation.
void check_order(Direction d, double best, double mean, double worst, std::string const& where,
                 std::vector<std::string>& violations) {
    if (!display_no_worse(d, best, mean)) {
        violations.push_back(fmt::format("{}: best {} is worse than mean {} ({})", where, best, mean,
                                         direction_name(d)));
    }
    if (!display_no_worse(d, mean, worst)) {
        violations.push_back(fmt::format("{}: mean {} is worse than worst {} ({})", where, mean, worst,
                                         direction_name(d)));
    }
}

auto numeric_array(json const& v, std::size_t n) -> bool {
    return v.is_array() && v.size() == n && std::all_of(v.begin(), v.end(), [](json const& x) { return x.is_number(); });
}

} // namespace

auto format_number(double value) -> std::string { return fmt::format("{}", value); }

auto fingerprint_hex(std::uint64_t fingerprint) -> std::string { return fmt::format("{:016x}", fingerprint); }

auto report_to_json(emt::RunReport const& report, std::uint64_t instance_fingerprint) -> ordered_json {
    ordered_json o;
    o["kind"] = "run_report";
    o["schema_version"] = kReportSchemaVersion;
    o["instance_fingerprint"] = fingerprint_hex(instance_fingerprint);
    o["mode"] = std::string(emt::to_string(report.mode));
    o["config"] = to_json(report.config);

    auto const tasks = emt::active_tasks(report.mode);
    auto history = ordered_json::array();
    for (auto const& record : report.history) {
        ordered_json h;
        h["generation"] = record.generation;
        h["cross_task_crossovers"] = record.cross_task_crossovers;
        auto archive = ordered_json::array();
        for (Task t : tasks) {
            ordered_json a;
            a["task"] = task_number(t);
            auto const& s = record.archive[task_index(t)];
            a["stats"] = s ? stats_json(t, *s) : ordered_json();
            archive.push_back(std::move(a));
        }
        h["archive"] = std::move(archive);
        history.push_back(std::move(h));
    }
    o["history"] = std::move(history);

    auto archives = ordered_json::array();
    for (Task t : tasks) {
        ordered_json a;
        a["task"] = task_number(t);
        a["objectives"] = ordered_json::array();
        for (std::size_t k = 0; k < kObjectiveCount; ++k) {
            a["objectives"].push_back({{"name", std::string(objective_info(t, k).name)},
                                       {"direction", direction_name(objective_info(t, k).direction)}});
        }
        auto members = ordered_json::array();
        for (auto const& m : report.archives[task_index(t)]) {
            members.push_back({{"objectives", displayed(t, m.objectives)},
                               {"feasible", m.feasible},
                               {"genome", m.genome}});
        }
        a["members"] = std::move(members);
        archives.push_back(std::move(a));
    }
    o["archives"] = std::move(archives);

    auto population = ordered_json::array();
    for (auto const& m : report.population) {
        population.push_back({{"skill_factor", task_number(m.skill_factor)},
                              {"scalar_fitness", m.scalar_fitness},
                              {"feasible", m.feasible},
                              {"objectives", displayed(m.skill_factor, m.objectives)},
                              {"genome", m.genome}});
    }
    o["population"] = std::move(population);
    return o;
}

auto aggregate(std::span<emt::RunReport const> reports, std::uint64_t instance_fingerprint) -> StatsTable {
    StatsTable table;
    table.instance_fingerprint = fingerprint_hex(instance_fingerprint);
    table.repetitions = reports.size();
    if (reports.empty()) {
        return table;
    }
    table.mode = reports.front().mode;
    table.population_size = reports.front().config.population_size;
    table.generations = reports.front().config.generations;

    for (Task t : emt::active_tasks(table.mode)) {
        for (std::size_t k = 0; k < kObjectiveCount; ++k) {
            auto const dir = objective_info(t, k).direction;
            std::vector<double> values;
            for (auto const& r : reports) {
                if (auto v = archive_best(t, k, r.archives[task_index(t)])) {
                    values.push_back(*v);
                }
            }
            if (values.empty()) {
                continue;
            }
            auto const [lo, hi] = std::minmax_element(values.begin(), values.end());
            double sum = 0.0;
            for (double v : values) {
                sum += v;
            }
            double const mean = std::clamp(sum / static_cast<double>(values.size()), *lo, *hi);
            StatsRow row;
            row.task = t;
            row.objective = k;
            row.optimum = dir == Direction::maximize ? *hi : *lo;
            row.worst = dir == Direction::maximize ? *lo : *hi;
            row.mean = mean;
            table.rows.push_back(row);
        }
    }
    return table;
}

auto stats_csv(StatsTable const& table) -> std::string {
    std::string out = "task,objective,direction,optimum,worst,mean\n";
    for (auto const& row : table.rows) {
        auto const& info = objective_info(row.task, row.objective);
        out += fmt::format("{},{},{},{},{},{}\n", task_number(row.task), info.name, direction_name(info.direction),
                           row.optimum, row.worst, row.mean);
    }
    return out;
}

auto stats_to_json(StatsTable const& table) -> ordered_json {
    ordered_json o;
    o["kind"] = "stats_table";
    o["schema_version"] = kReportSchemaVersion;
    o["instance_fingerprint"] = table.instance_fingerprint;
    o["mode"] = std::string(emt::to_string(table.mode));
    o["population_size"] = table.population_size;
    o["generations"] = table.generations;
    o["repetitions"] = table.repetitions;
    auto rows = ordered_json::array();
    for (auto const& row : table.rows) {
        auto const& info = objective_info(row.task, row.objective);
        rows.push_back({{"task", task_number(row.task)},
                        {"objective", std::string(info.name)},
                        {"direction", direction_name(info.direction)},
                        {"optimum", row.optimum},
                        {"worst", row.worst},
                        {"mean", row.mean}});
    }
    o["rows"] = std::move(rows);
    return o;
}

auto stats_from_json(json const& doc) -> StatsTable {
    auto fail = [](std::string const& what) { throw ParseError("stats table: " + what); };
    if (!doc.is_object() || doc.value("kind", "") != "stats_table") {
        fail("not a stats_table document");
    }
    StatsTable table;
    try {
        table.instance_fingerprint = doc.at("instance_fingerprint").get<std::string>();
        table.mode = emt::parse_run_mode(doc.at("mode").get<std::string>());
        table.population_size = doc.at("population_size").get<std::size_t>();
        table.generations = doc.at("generations").get<std::size_t>();
        table.repetitions = doc.at("repetitions").get<std::size_t>();
        auto const& rows = doc.at("rows");
        if (!rows.is_array()) {
            fail("rows must be an array");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto const& r = rows[i];
            auto const task = task_from_number(r.at("task").get<int>());
            if (!task) {
                fail(fmt::format("rows[{}].task must be 1 or 2", i));
            }
            auto const k = objective_index(*task, r.at("objective").get<std::string>());
            if (!k) {
                fail(fmt::format("rows[{}].objective is not an objective of task {}", i, task_number(*task)));
            }
            StatsRow row;
            row.task = *task;
            row.objective = *k;
            row.optimum = r.at("optimum").get<double>();
            row.worst = r.at("worst").get<double>();
            row.mean = r.at("mean").get<double>();
            table.rows.push_back(row);
        }
    } catch (json::exception const& e) {
        fail(e.what());
    } catch (ConfigError const& e) {
        fail(e.what());
    }
    return table;
}

auto convergence_csv(std::span<emt::RunReport const> reports) -> std::string {
    std::string out = "generation,task,objective,statistic,value\n";
    if (reports.empty()) {
        return out;
    }
    auto const tasks = emt::active_tasks(reports.front().mode);
    std::size_t generations = reports.front().history.size();
    for (auto const& r : reports) {
        generations = std::min(generations, r.history.size());
    }
    for (std::size_t g = 0; g < generations; ++g) {
        for (Task t : tasks) {
            for (std::size_t k = 0; k < kObjectiveCount; ++k) {
                for (bool best : {true, false}) {
                    double sum = 0.0;
                    std::size_t n = 0;
                    for (auto const& r : reports) {
                        if (auto const& s = r.history[g].archive[task_index(t)]) {
                            sum += display_value(t, k, best ? s->best[k] : s->mean[k]);
                            ++n;
                        }
                    }
                    if (n == 0) {
                        continue;
                    }
                    out += fmt::format("{},{},{},{},{}\n", reports.front().history[g].generation, task_number(t),
                                       objective_info(t, k).name, best ? "best" : "mean",
                                       sum / static_cast<double>(n));
                }
            }
        }
    }
    return out;
}

auto boxplot_csv(std::span<emt::RunReport const> reports) -> std::string {
    std::string out = "rep,task,objective,value\n";
    for (std::size_t rep = 0; rep < reports.size(); ++rep) {
        for (Task t : emt::active_tasks(reports[rep].mode)) {
            for (auto const& m : reports[rep].archives[task_index(t)]) {
                for (std::size_t k = 0; k < kObjectiveCount; ++k) {
                    out += fmt::format("{},{},{},{}\n", rep, task_number(t), objective_info(t, k).name,
                                       display_value(t, k, m.objectives[k]));
                }
            }
        }
    }
    return out;
}

auto check_report_json(json const& doc) -> std::vector<std::string> {
    std::vector<std::string> v;
    if (!doc.is_object() || doc.value("kind", "") != "run_report") {
        v.emplace_back("document is not a run_report");
        return v;
    }
    try {
        for (auto const& h : doc.at("history")) {
            auto const gen = h.at("generation").get<std::size_t>();
            for (auto const& a : h.at("archive")) {
                auto const task = task_from_number(a.at("task").get<int>());
                if (!task) {
                    v.push_back(fmt::format("history generation {}: unknown task", gen));
                    continue;
                }
                auto const& s = a.at("stats");
                if (s.is_null()) {
                    continue;
                }
                auto const& best = s.at("best");
                auto const& mean = s.at("mean");
                auto const& worst = s.at("worst");
                if (!numeric_array(best, kObjectiveCount) || !numeric_array(mean, kObjectiveCount) ||
                    !numeric_array(worst, kObjectiveCount)) {
                    v.push_back(fmt::format("history generation {} task {}: stats need {} numbers each", gen,
                                            task_number(*task), kObjectiveCount));
                    continue;
                }
                for (std::size_t k = 0; k < kObjectiveCount; ++k) {
                    auto const& info = objective_info(*task, k);
                    check_order(info.direction, best[k].get<double>(), mean[k].get<double>(), worst[k].get<double>(),
                                fmt::format("history generation {} task {} {}", gen, task_number(*task), info.name),
                                v);
                }
            }
        }
        for (auto const& a : doc.at("archives")) {
            auto const task = task_from_number(a.at("task").get<int>());
            if (!task) {
                v.emplace_back("archives: unknown task");
                continue;
            }
            auto const& members = a.at("members");
            selection::ObjectiveMatrix points(0, kObjectiveCount);
            for (std::size_t i = 0; i < members.size(); ++i) {
                auto const& m = members[i];
                auto const& obj = m.at("objectives");
                if (!numeric_array(obj, kObjectiveCount)) {
                    v.push_back(fmt::format("archive task {} member {}: bad objective vector", task_number(*task), i));
                    continue;
                }
                if (!m.at("feasible").get<bool>()) {
                    v.push_back(fmt::format("archive task {} member {}: infeasible member", task_number(*task), i));
                }
                ObjectiveVector internal{};
                for (std::size_t k = 0; k < kObjectiveCount; ++k) {
                    internal[k] = internal_value(*task, k, obj[k].get<double>());
                }
                points.append(internal);
            }
            for (std::size_t i = 0; i < points.rows(); ++i) {
                for (std::size_t j = 0; j < points.rows(); ++j) {
                    if (i != j && selection::dominates(points.row(j), points.row(i))) {
                        v.push_back(fmt::format("archive task {}: member {} is dominated by member {}",
                                                task_number(*task), i, j));
                        break;
                    }
                }
            }
        }
    } catch (json::exception const& e) {
        v.push_back(std::string("malformed run_report: ") + e.what());
    }
    return v;
}

auto check_stats_json(json const& doc) -> std::vector<std::string> {
    std::vector<std::string> v;
    StatsTable table;
    try {
        table = stats_from_json(doc);
    } catch (ParseError const& e) {
        v.emplace_back(e.what());
        return v;
    }
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        auto const& row = table.rows[i];
        auto const& info = objective_info(row.task, row.objective);
        check_order(info.direction, row.optimum, row.mean, row.worst,
                    fmt::format("rows[{}] task {} {}", i, task_number(row.task), info.name), v);
    }
    return v;
}

} // namespace emtedge::harness
