#ifndef CABINET_BENCH_HPP
#define CABINET_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cabinet/psa.hpp"

namespace cabinet {

/// Initial / Final for one objective. Infinite when only Final is zero,
/// 1 when both are.
double improvement_ratio(double initial, double final_value);

struct BenchCell {
    double initial_temperature = 0.0;
    std::uint64_t seed = 0;
    ObjectiveVector initial_mean;  ///< mean over the run's own initial generating set
    ObjectiveVector final_objectives;
    double heat_improvement = 0.0;
    double wire_improvement = 0.0;
    std::uint64_t iterations = 0;
    double wall_time_seconds = 0.0;
};

struct Spread {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct BenchSummary {
    double initial_temperature = 0.0;
    std::size_t runs = 0;
    Spread heat_improvement;
    Spread wire_improvement;
    double mean_final_heat = 0.0;
    double mean_final_wire_mm = 0.0;
    double mean_iterations = 0.0;
    double mean_wall_time_seconds = 0.0;
};

struct BenchmarkReport {
    std::vector<BenchCell> cells;  ///< grouped by temperature, then seed
    std::vector<BenchSummary> summaries;
};

struct BenchmarkPlan {
    PsaConfig base;  ///< everything but temperature and seed
    std::vector<double> initial_temperatures{100.0, 1000.0, 10000.0};
    std::size_t runs = 10;
    std::uint64_t seed_base = 1;
    std::size_t threads = 0;  ///< 0: default_thread_count()
};

/// hardware_concurrency, capped by CABINET_PSA_THREADS when set.
std::size_t default_thread_count();

/// Runs every (temperature, seed) cell as an isolated engine run; cells may
/// execute on parallel workers but the report order is fixed.
BenchmarkReport run_benchmark(const BenchmarkPlan& plan, const EvaluationContext& ctx);

std::string benchmark_json(const BenchmarkReport& report, const std::string& input_name,
                           bool include_timing = true);
std::string benchmark_table(const BenchmarkReport& report);

}  // namespace cabinet

#endif  // CABINET_BENCH_HPP
