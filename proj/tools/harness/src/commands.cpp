#include "emtedge/harness/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include <fmt/format.h>

#include "emtedge/errors.hpp"
#include "emtedge/harness/report_io.hpp"
#include "emtedge/model/instance_io.hpp"

namespace emtedge::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_text(fs::path const& path, std::string const& text) {
    std::ofstream sink(path, std::ios::binary | std::ios::trunc);
    if (!sink) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    sink << text;
    sink.flush();
    if (!sink) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

auto read_text(fs::path const& path) -> std::string {
    std::ifstream source(path, std::ios::binary);
    if (!source) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << source.rdbuf();
    return buffer.str();
}

auto read_json(fs::path const& path) -> json {
    auto const text = read_text(path);
    try {
        return json::parse(text);
    } catch (json::parse_error const& e) {
        throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

auto dump(nlohmann::ordered_json const& doc) -> std::string { return doc.dump(2) + "\n"; }

// Runs `body`, mapping exceptions to exit codes with a diagnostic on `err`.
template <typename Body>
auto guarded(std::ostream& err, Body&& body) -> int {
    try {
        return body();
    } catch (ValidationError const& e) {
        for (auto const& line : e.violations()) {
            err << "violation: " << line << "\n";
        }
        return kExitValidation;
    } catch (ParseError const& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (ConfigError const& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (IoError const& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (std::ios_base::failure const& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (fs::filesystem_error const& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

auto summary(model::EdgeInstance const& instance) -> std::string {
    return fmt::format("{} edge clouds, {} users, {} base stations, {} terminals, {} subtasks",
                       instance.edge_clouds.size(), instance.users.size(), instance.base_stations.size(),
                       instance.terminals.size(), instance.total_subtasks());
}

auto stats_path(fs::path const& path) -> fs::path { return fs::is_directory(path) ? path / kStatsJson : path; }

auto load_stats(fs::path const& path) -> StatsTable { return stats_from_json(read_json(stats_path(path))); }

auto winner(Direction d, double multitask, double single) -> char const* {
    if (multitask == single) {
        return "tie";
    }
    return display_no_worse(d, multitask, single) ? "multitask" : "singletask";
}

auto split_csv_line(std::string const& line) -> std::vector<std::string> {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

// Per-rep archive-best from boxplot.csv, aggregated and compared with the
// stored stats table.
void check_boxplot_agrees(fs::path const& dir, StatsTable const& table, std::vector<std::string>& violations) {
    std::istringstream in(read_text(dir / kBoxplotCsv));
    std::string line;
    std::getline(in, line);
    // (task, objective) -> rep -> best displayed value
    std::map<std::pair<int, std::string>, std::map<long, double>> best;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto const cells = split_csv_line(line);
        if (cells.size() != 4) {
            violations.push_back(fmt::format("{} line {}: expected 4 cells", kBoxplotCsv, line_no));
            continue;
        }
        int const task = std::stoi(cells[1]);
        long const rep = std::stol(cells[0]);
        double const value = std::stod(cells[3]);
        bool maximize = false;
        if (task == 1 || task == 2) {
            for (std::size_t k = 0; k < kObjectiveCount; ++k) {
                auto const& info = objective_info(task_from_index(static_cast<std::size_t>(task - 1)), k);
                maximize = maximize || (info.name == cells[2] && info.direction == Direction::maximize);
            }
        }
        auto& slot = best[{task, cells[2]}];
        auto [it, inserted] = slot.emplace(rep, value);
        if (!inserted) {
            it->second = maximize ? std::max(it->second, value) : std::min(it->second, value);
        }
    }
    for (auto const& row : table.rows) {
        auto const& info = objective_info(row.task, row.objective);
        auto const found = best.find({task_number(row.task), std::string(info.name)});
        if (found == best.end()) {
            violations.push_back(fmt::format("{}: no values for task {} {}", kBoxplotCsv, task_number(row.task),
                                             info.name));
            continue;
        }
        double lo = INFINITY;
        double hi = -INFINITY;
        double sum = 0.0;
        for (auto const& [rep, v] : found->second) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        double const mean = std::clamp(sum / static_cast<double>(found->second.size()), lo, hi);
        double const optimum = info.direction == Direction::maximize ? hi : lo;
        double const worst = info.direction == Direction::maximize ? lo : hi;
        auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
        if (!close(optimum, row.optimum) || !close(worst, row.worst) || !close(mean, row.mean)) {
            violations.push_back(fmt::format("task {} {}: stats table disagrees with {}", task_number(row.task),
                                             info.name, kBoxplotCsv));
        }
    }
}

auto validate_file(fs::path const& path, std::ostream& out, std::vector<std::string>& violations) -> void {
    auto const report_violation = [&](std::string const& what) { violations.push_back(path.string() + ": " + what); };
    json doc;
    try {
        doc = read_json(path);
    } catch (ParseError const& e) {
        report_violation(e.what());
        return;
    }
    std::string const kind = doc.is_object() ? doc.value("kind", "") : "";
    std::vector<std::string> found;
    std::string what;
    if (kind == "run_report") {
        found = check_report_json(doc);
        what = "run report";
    } else if (kind == "stats_table") {
        found = check_stats_json(doc);
        what = "stats table";
    } else {
        what = "instance";
        try {
            auto const instance = model::instance_from_json(doc);
            found = model::find_violations(instance);
            if (found.empty()) {
                what += ", " + summary(instance);
            }
        } catch (ParseError const& e) {
            found.emplace_back(e.what());
        }
    }
    for (auto const& f : found) {
        report_violation(f);
    }
    if (found.empty()) {
        out << "ok: " << path.string() << " (" << what << ")\n";
    }
}

} // namespace

auto rep_file_name(std::size_t rep) -> std::string { return fmt::format("rep_{:03}.json", rep); }

auto cmd_gen(GenOptions const& options, std::ostream& out, std::ostream& err) -> int {
    return guarded(err, [&] {
        model::validate(options.gen);
        auto const instance = model::generate_instance(options.gen, options.seed);
        write_text(options.out, model::dump_instance(instance));
        out << "wrote " << options.out.string() << ": " << summary(instance) << ", box "
            << format_number(options.gen.box_size) << " m\n";
        return int{kExitOk};
    });
}

auto cmd_run(ExperimentConfig const& config, std::ostream& out, std::ostream& err) -> int {
    std::vector<fs::path> written;
    bool created_dir = false;
    int const code = guarded(err, [&] {
        validate(config);
        auto const& dir = config.output_dir;
        if (!fs::exists(dir)) {
            fs::create_directories(dir);
            created_dir = true;
        }
        auto const result = run_experiment(config);
        auto const fp = model::instance_fingerprint(result.instance);

        auto emit = [&](fs::path const& name, std::string const& text) {
            auto const path = dir / name;
            written.push_back(path);
            write_text(path, text);
        };
        emit(kInstanceFile, model::dump_instance(result.instance));
        for (std::size_t rep = 0; rep < result.reports.size(); ++rep) {
            emit(rep_file_name(rep), dump(report_to_json(result.reports[rep], fp)));
        }
        auto const table = aggregate(result.reports, fp);
        emit(kStatsCsv, stats_csv(table));
        emit(kStatsJson, dump(stats_to_json(table)));
        emit(kConvergenceCsv, convergence_csv(result.reports));
        emit(kBoxplotCsv, boxplot_csv(result.reports));

        out << "ran " << result.reports.size() << " repetition(s) in " << emt::to_string(config.mode) << " mode on "
            << summary(result.instance) << "; results in " << dir.string() << "\n";
        return int{kExitOk};
    });
    if (code != kExitOk) {
        std::error_code ec;
        for (auto const& path : written) {
            fs::remove(path, ec);
        }
        if (created_dir) {
            fs::remove(config.output_dir, ec);
        }
    }
    return code;
}

auto cmd_compare(CompareOptions const& options, std::ostream& out, std::ostream& err) -> int {
    return guarded(err, [&] {
        auto const multi = load_stats(options.multitask);
        if (multi.mode != emt::RunMode::multitask) {
            throw ParseError(stats_path(options.multitask).string() + " is not a multitask run");
        }
        if (options.single.empty()) {
            throw ConfigError("compare needs at least one single-task run");
        }
        std::vector<std::string> refusals;
        std::map<std::pair<Task, std::size_t>, StatsRow> single_rows;
        for (auto const& path : options.single) {
            auto const s = load_stats(path);
            auto const where = stats_path(path).string();
            if (s.mode == emt::RunMode::multitask) {
                refusals.push_back(where + " is not a single-task run");
            }
            if (s.instance_fingerprint != multi.instance_fingerprint) {
                refusals.push_back(fmt::format("{} was run on instance {}, the multitask run on {}", where,
                                               s.instance_fingerprint, multi.instance_fingerprint));
            }
            if (std::tie(s.population_size, s.generations, s.repetitions) !=
                std::tie(multi.population_size, multi.generations, multi.repetitions)) {
                refusals.push_back(fmt::format("{} budget N={} G={} R={} differs from multitask N={} G={} R={}", where,
                                               s.population_size, s.generations, s.repetitions, multi.population_size,
                                               multi.generations, multi.repetitions));
            }
            for (auto const& row : s.rows) {
                single_rows[{row.task, row.objective}] = row;
            }
        }
        if (!refusals.empty()) {
            throw ValidationError(refusals);
        }

        std::string csv = "task,objective,direction,multitask_optimum,singletask_optimum,optimum_winner,"
                          "multitask_mean,singletask_mean,mean_winner\n";
        std::size_t cells = 0;
        std::map<std::string, std::size_t> wins;
        for (auto const& row : multi.rows) {
            auto const found = single_rows.find({row.task, row.objective});
            if (found == single_rows.end()) {
                continue;
            }
            auto const& info = objective_info(row.task, row.objective);
            auto const* w_opt = winner(info.direction, row.optimum, found->second.optimum);
            auto const* w_mean = winner(info.direction, row.mean, found->second.mean);
            ++wins[w_opt];
            ++wins[w_mean];
            cells += 2;
            csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", task_number(row.task), info.name,
                               info.direction == Direction::maximize ? "maximize" : "minimize", row.optimum,
                               found->second.optimum, w_opt, row.mean, found->second.mean, w_mean);
        }
        if (cells == 0) {
            throw ValidationError({"no objective appears in both the multitask and the single-task runs"});
        }
        if (options.out) {
            write_text(*options.out, csv);
        } else {
            out << csv;
        }
        out << fmt::format("compared {} cells: multitask {}, singletask {}, tie {}\n", cells, wins["multitask"],
                           wins["singletask"], wins["tie"]);
        return int{kExitOk};
    });
}

auto cmd_validate(fs::path const& path, std::ostream& out, std::ostream& err) -> int {
    return guarded(err, [&] {
        if (!fs::exists(path)) {
            throw IoError("no such file or directory '" + path.string() + "'");
        }
        std::vector<std::string> violations;
        if (fs::is_directory(path)) {
            std::vector<fs::path> files;
            for (auto const& entry : fs::directory_iterator(path)) {
                if (entry.path().extension() == ".json") {
                    files.push_back(entry.path());
                }
            }
            std::sort(files.begin(), files.end());
            if (files.empty()) {
                throw IoError("'" + path.string() + "' holds no JSON files");
            }
            for (auto const& f : files) {
                validate_file(f, out, violations);
            }
            if (fs::exists(path / kStatsJson) && fs::exists(path / kBoxplotCsv)) {
                try {
                    check_boxplot_agrees(path, stats_from_json(read_json(path / kStatsJson)), violations);
                } catch (ParseError const&) {
                    // already reported by validate_file
                } catch (std::invalid_argument const& e) {
                    violations.push_back(std::string(kBoxplotCsv) + ": unreadable number: " + e.what());
                }
            }
        } else {
            validate_file(path, out, violations);
        }
        if (!violations.empty()) {
            throw ValidationError(violations);
        }
        return int{kExitOk};
    });
}

} // namespace emtedge::harness
