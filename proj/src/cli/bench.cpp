#include "cabinet/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace cabinet {

double improvement_ratio(double initial, double final_value) {
    if (final_value == 0.0) {
        return initial == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    return initial / final_value;
}

std::size_t default_thread_count() {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("CABINET_PSA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && v > 0) {
            threads = std::min(threads, static_cast<std::size_t>(v));
        }
    }
    return threads;
}

namespace {

Spread spread_of(const std::vector<double>& values) {
    Spread s;
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    return s;
}

}  // namespace

BenchmarkReport run_benchmark(const BenchmarkPlan& plan, const EvaluationContext& ctx) {
    BenchmarkReport report;
    if (plan.runs == 0 || plan.initial_temperatures.empty()) {
        return report;
    }

    std::vector<PsaConfig> configs;
    for (double t0 : plan.initial_temperatures) {
        for (std::size_t r = 0; r < plan.runs; ++r) {
            PsaConfig c = plan.base;
            c.initial_temperature = t0;
            c.rng_seed = plan.seed_base + r;
            validate(c);
            configs.push_back(c);
        }
    }

    report.cells.resize(configs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                const OptimizationResult r = run(configs[i], ctx);
                BenchCell& cell = report.cells[i];
                cell.initial_temperature = configs[i].initial_temperature;
                cell.seed = configs[i].rng_seed;
                cell.initial_mean = r.initial_mean;
                cell.final_objectives = r.recommended.objectives;
                cell.heat_improvement = improvement_ratio(r.initial_mean.heat, r.recommended.objectives.heat);
                cell.wire_improvement =
                    improvement_ratio(r.initial_mean.wire_mm, r.recommended.objectives.wire_mm);
                cell.iterations = r.iterations;
                cell.wall_time_seconds = r.wall_time_seconds;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    const std::size_t threads =
        std::min(plan.threads ? plan.threads : default_thread_count(), configs.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (std::size_t g = 0; g < plan.initial_temperatures.size(); ++g) {
        const auto first = report.cells.begin() + static_cast<std::ptrdiff_t>(g * plan.runs);
        std::vector<double> heat, wire;
        BenchSummary s;
        s.initial_temperature = plan.initial_temperatures[g];
        s.runs = plan.runs;
        for (auto it = first; it != first + static_cast<std::ptrdiff_t>(plan.runs); ++it) {
            heat.push_back(it->heat_improvement);
            wire.push_back(it->wire_improvement);
            s.mean_final_heat += it->final_objectives.heat;
            s.mean_final_wire_mm += it->final_objectives.wire_mm;
            s.mean_iterations += static_cast<double>(it->iterations);
            s.mean_wall_time_seconds += it->wall_time_seconds;
        }
        const auto n = static_cast<double>(plan.runs);
        s.heat_improvement = spread_of(heat);
        s.wire_improvement = spread_of(wire);
        s.mean_final_heat /= n;
        s.mean_final_wire_mm /= n;
        s.mean_iterations /= n;
        s.mean_wall_time_seconds /= n;
        report.summaries.push_back(s);
    }
    return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json ratio_json(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

ordered_json spread_json(const Spread& s) {
    return ordered_json{{"mean", ratio_json(s.mean)}, {"min", ratio_json(s.min)}, {"max", ratio_json(s.max)}};
}

}  // namespace

std::string benchmark_json(const BenchmarkReport& report, const std::string& input_name,
                           bool include_timing) {
    ordered_json root;
    root["input"] = input_name;
    root["improvementDefinition"] =
        "Initial / Final, Initial = mean objectives of the run's initial generating set, "
        "Final = recommended solution";
    root["summaries"] = ordered_json::array();
    for (const auto& s : report.summaries) {
        ordered_json j{{"initialTemperature", s.initial_temperature},
                       {"runs", s.runs},
                       {"heatImprovement", spread_json(s.heat_improvement)},
                       {"wireImprovement", spread_json(s.wire_improvement)},
                       {"meanFinalHeat", s.mean_final_heat},
                       {"meanFinalWireMm", s.mean_final_wire_mm},
                       {"meanIterations", s.mean_iterations}};
        if (include_timing) {
            j["meanWallTimeSeconds"] = s.mean_wall_time_seconds;
        }
        root["summaries"].push_back(std::move(j));
    }
    root["runs"] = ordered_json::array();
    for (const auto& c : report.cells) {
        ordered_json j{{"initialTemperature", c.initial_temperature},
                       {"seed", c.seed},
                       {"initialMean", {{"heat", c.initial_mean.heat}, {"wireMm", c.initial_mean.wire_mm}}},
                       {"final", {{"heat", c.final_objectives.heat}, {"wireMm", c.final_objectives.wire_mm}}},
                       {"heatImprovement", ratio_json(c.heat_improvement)},
                       {"wireImprovement", ratio_json(c.wire_improvement)},
                       {"iterations", c.iterations}};
        if (include_timing) {
            j["wallTimeSeconds"] = c.wall_time_seconds;
        }
        root["runs"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

std::string benchmark_table(const BenchmarkReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%10s %5s %22s %22s %12s %10s\n", "T0", "runs",
                  "heat impr mean[min,max]", "wire impr mean[min,max]", "iterations", "seconds");
    out << line;
    for (const auto& s : report.summaries) {
        std::snprintf(line, sizeof line, "%10g %5zu %7.2f [%5.2f,%5.2f] %7.2f [%5.2f,%5.2f] %12.0f %10.3f\n",
                      s.initial_temperature, s.runs, s.heat_improvement.mean, s.heat_improvement.min,
                      s.heat_improvement.max, s.wire_improvement.mean, s.wire_improvement.min,
                      s.wire_improvement.max, s.mean_iterations, s.mean_wall_time_seconds);
        out << line;
    }
    return out.str();
}

}  // namespace cabinet
