/**
 * @file psa.hpp
 * @brief Pareto Simulated Annealing over component permutations.
 *
 * A generating set S of layouts walks the permutation space simultaneously.
 * Each member carries its own objective weights; the weights steer the
 * scalarized acceptance test while every candidate is offered to a shared
 * Pareto archive purely by dominance.
 *
 * Per sweep, for each s in S:
 *   1. s' = neighbor(s)                       (swap or shift move)
 *   2. if s' dominates s: on the first such event draw random weights for s,
 *      afterwards adapt them with update_weights()
 *   3. offer s' to the archive
 *   4. replace s by s' with acceptance_probability(s, s', weights(s), T)
 * The temperature is multiplied by the cooling rate after every
 * `steps_per_temperature` sweeps; the search stops once T <= 1.
 *
 * Random draws come from a single stream in this order: initial shuffles
 * (Fisher-Yates, one per member of S), then per candidate the move draws,
 * the weight draws (first improvement only), and the acceptance coin, which
 * is only drawn when the acceptance probability is below one.
 */

#ifndef CABINET_PSA_HPP
#define CABINET_PSA_HPP

#include <cstdint>
#include <vector>

#include "cabinet/archive.hpp"
#include "cabinet/objectives.hpp"
#include "cabinet/rng.hpp"

namespace cabinet {

struct PsaConfig {
    double initial_temperature = 1000.0;
    double cooling_rate = 0.999;
    std::uint32_t steps_per_temperature = 1;
    std::uint32_t generating_set_size = 8;
    double weight_constant = 1.05;  ///< c, multiplier/divisor of weights
    double weight_floor = 0.01;     ///< each weight stays in [floor, 1 - floor]
    double swap_probability = 0.8;  ///< otherwise a shift move
    std::uint64_t rng_seed = 1;

    friend bool operator==(const PsaConfig&, const PsaConfig&) = default;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Throws InvalidConfig when a parameter is outside its domain.
void validate(const PsaConfig& config);

/// Warm restarts anneal from a tenth of the configured temperature.
inline constexpr double warm_temperature_divisor = 10.0;

struct WeightVector {
    double heat = 0.5;
    double wire = 0.5;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct GeneratingSolution {
    Layout layout;
    ObjectiveVector objectives;
    WeightVector weights;  ///< (0.5, 0.5) until the first improvement
    bool weights_initialized = false;
};

std::vector<GeneratingSolution> init_generating_set(const EvaluationContext& ctx,
                                                    std::size_t set_size, Rng& rng);

/// Exchange the components at positions i and j.
Layout swap_positions(Layout layout, std::size_t i, std::size_t j);

/// Remove the component at `from` and reinsert it so that it ends up at
/// position `to` of the result (0 <= to < n).
Layout shift_component(Layout layout, std::size_t from, std::size_t to);

/// Random swap (probability p_swap) or shift move. Identity for n < 2.
Layout neighbor(const Layout& layout, double p_swap, Rng& rng);

/// min{1, exp(sum_w lambda_w (f_w(current) - f_w(candidate)) / T)}.
double acceptance_probability(const ObjectiveVector& current, const ObjectiveVector& candidate,
                              const WeightVector& weights, double temperature);

/**
 * Multiply an objective's weight by c when the candidate is no better on it
 * (candidate >= current), divide by c otherwise; then renormalize, clamp to
 * [floor, 1 - floor] and renormalize again.
 */
WeightVector update_weights(const WeightVector& weights, const ObjectiveVector& current,
                            const ObjectiveVector& candidate, double c, double floor);

/// Each weight uniform on [floor, 1 - floor], then normalized.
WeightVector random_weights(double floor, Rng& rng);

struct RecommendedSolution {
    Layout layout;
    ObjectiveVector objectives;
    Placement placement;
};

struct OptimizationResult {
    PsaConfig config;  ///< effective configuration (warm runs carry the reduced T0)
    bool warm_start = false;
    std::size_t component_count = 0;
    ParetoArchive archive;
    RecommendedSolution recommended;
    ObjectiveVector initial_mean;  ///< mean objectives of the initial generating set
    std::uint64_t iterations = 0;  ///< neighbor generations
    std::uint64_t temperature_levels = 0;
    double fraction_of_space = 0.0;
    double wall_time_seconds = 0.0;
};

OptimizationResult run(const PsaConfig& config, const EvaluationContext& ctx);
OptimizationResult run(const PsaConfig& config, const std::vector<Component>& components,
                       const CabinetSpec& cabinet);

/// Carry a layout over to an edited component set of size n: unknown
/// indices are dropped and missing ones appended in ascending order.
Layout repair_layout(const Layout& previous, std::size_t n);

/**
 * Re-optimize starting from `previous`: S holds the repaired layout plus
 * |S| - 1 copies perturbed by 1-3 random moves each, and the temperature
 * starts at T0 / warm_temperature_divisor.
 */
OptimizationResult run_warm(const PsaConfig& config, const EvaluationContext& ctx,
                            const Layout& previous);

}  // namespace cabinet

#endif  // CABINET_PSA_HPP
