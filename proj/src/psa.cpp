#include "cabinet/psa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace cabinet {

void validate(const PsaConfig& config) {
    auto fail = [](const std::string& what) { throw InvalidConfig("InvalidConfig: " + what); };
    if (!std::isfinite(config.initial_temperature) || config.initial_temperature <= 1.0) {
        fail("initial temperature must be > 1");
    }
    if (!(config.cooling_rate > 0.0 && config.cooling_rate < 1.0)) {
        fail("cooling rate must lie in (0, 1)");
    }
    if (config.steps_per_temperature < 1) {
        fail("steps per temperature must be >= 1");
    }
    if (config.generating_set_size < 1) {
        fail("generating set size must be >= 1");
    }
    if (!std::isfinite(config.weight_constant) || config.weight_constant <= 1.0) {
        fail("weight constant must be > 1");
    }
    if (!(config.weight_floor > 0.0 && config.weight_floor < 0.5)) {
        fail("weight floor must lie in (0, 0.5)");
    }
    if (!(config.swap_probability >= 0.0 && config.swap_probability <= 1.0)) {
        fail("swap probability must lie in [0, 1]");
    }
}

std::vector<GeneratingSolution> init_generating_set(const EvaluationContext& ctx,
                                                    std::size_t set_size, Rng& rng) {
    std::vector<GeneratingSolution> set;
    set.reserve(set_size);
    for (std::size_t k = 0; k < set_size; ++k) {
        Layout layout = identity_layout(ctx.size());
        auto& order = layout.order;
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[rng.below(i)]);
        }
        const ObjectiveVector f = evaluate(layout, ctx);
        set.push_back(GeneratingSolution{std::move(layout), f, WeightVector{}, false});
    }
    return set;
}

Layout swap_positions(Layout layout, std::size_t i, std::size_t j) {
    std::swap(layout.order.at(i), layout.order.at(j));
    return layout;
}

Layout shift_component(Layout layout, std::size_t from, std::size_t to) {
    auto& order = layout.order;
    const ComponentIndex moved = order.at(from);
    order.erase(order.begin() + static_cast<std::ptrdiff_t>(from));
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(std::min(to, order.size())), moved);
    return layout;
}

Layout neighbor(const Layout& layout, double p_swap, Rng& rng) {
    const std::size_t n = layout.size();
    if (n < 2) {
        return layout;
    }
    if (rng.uniform01() < p_swap) {
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) {
            ++j;
        }
        return swap_positions(layout, i, j);
    }
    const std::size_t from = rng.below(n);
    std::size_t to = rng.below(n - 1);
    if (to >= from) {
        ++to;
    }
    return shift_component(layout, from, to);
}

double acceptance_probability(const ObjectiveVector& current, const ObjectiveVector& candidate,
                              const WeightVector& weights, double temperature) {
    const double gain = weights.heat * (current.heat - candidate.heat) +
                        weights.wire * (current.wire_mm - candidate.wire_mm);
    const double exponent = gain / temperature;
    if (!(exponent < 0.0)) {
        return 1.0;
    }
    return std::exp(exponent);
}

namespace {

WeightVector normalized(WeightVector w) {
    const double sum = w.heat + w.wire;
    return WeightVector{w.heat / sum, w.wire / sum};
}

WeightVector clamped(WeightVector w, double floor) {
    w.heat = std::clamp(w.heat, floor, 1.0 - floor);
    w.wire = std::clamp(w.wire, floor, 1.0 - floor);
    return w;
}

}  // namespace

WeightVector update_weights(const WeightVector& weights, const ObjectiveVector& current,
                            const ObjectiveVector& candidate, double c, double floor) {
    WeightVector raw = weights;
    raw.heat = candidate.heat >= current.heat ? raw.heat * c : raw.heat / c;
    raw.wire = candidate.wire_mm >= current.wire_mm ? raw.wire * c : raw.wire / c;
    return normalized(clamped(normalized(raw), floor));
}

WeightVector random_weights(double floor, Rng& rng) {
    WeightVector w;
    w.heat = rng.uniform(floor, 1.0 - floor);
    w.wire = rng.uniform(floor, 1.0 - floor);
    return normalized(w);
}

namespace {

ObjectiveVector mean_objectives(const std::vector<GeneratingSolution>& set) {
    ObjectiveVector sum;
    for (const auto& s : set) {
        sum.heat += s.objectives.heat;
        sum.wire_mm += s.objectives.wire_mm;
    }
    const auto count = static_cast<double>(set.size());
    return ObjectiveVector{sum.heat / count, sum.wire_mm / count};
}

OptimizationResult anneal(const PsaConfig& config, const EvaluationContext& ctx,
                          std::vector<GeneratingSolution> set, Rng& rng, bool warm,
                          std::chrono::steady_clock::time_point started) {
    OptimizationResult result;
    result.config = config;
    result.warm_start = warm;
    result.component_count = ctx.size();
    result.initial_mean = mean_objectives(set);

    ParetoArchive& archive = result.archive;
    for (const auto& s : set) {
        archive.insert(s.layout, s.objectives);
    }

    double temperature = config.initial_temperature;
    while (temperature > 1.0) {
        for (std::uint32_t step = 0; step < config.steps_per_temperature; ++step) {
            for (auto& s : set) {
                Layout candidate = neighbor(s.layout, config.swap_probability, rng);
                const ObjectiveVector f = evaluate(candidate, ctx);
                ++result.iterations;

                if (dominates(f, s.objectives)) {
                    if (s.weights_initialized) {
                        s.weights = update_weights(s.weights, s.objectives, f,
                                                   config.weight_constant, config.weight_floor);
                    } else {
                        s.weights = random_weights(config.weight_floor, rng);
                        s.weights_initialized = true;
                    }
                }
                archive.insert(candidate, f);

                const double p = acceptance_probability(s.objectives, f, s.weights, temperature);
                if (p >= 1.0 || rng.uniform01() < p) {
                    s.layout = std::move(candidate);
                    s.objectives = f;
                }
            }
        }
        temperature *= config.cooling_rate;
        ++result.temperature_levels;
    }

    const ArchiveEntry& best = select_recommended(archive);
    result.recommended = RecommendedSolution{
        best.layout, best.objectives, pack(best.layout, ctx.components(), ctx.cabinet())};
    result.fraction_of_space = fraction_of_space(result.iterations, ctx.size());
    result.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace

OptimizationResult run(const PsaConfig& config, const EvaluationContext& ctx) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    Rng rng(config.rng_seed);
    auto set = init_generating_set(ctx, config.generating_set_size, rng);
    return anneal(config, ctx, std::move(set), rng, false, started);
}

OptimizationResult run(const PsaConfig& config, const std::vector<Component>& components,
                       const CabinetSpec& cabinet) {
    return run(config, EvaluationContext(components, cabinet));
}

Layout repair_layout(const Layout& previous, std::size_t n) {
    Layout repaired;
    repaired.order.reserve(n);
    std::vector<bool> seen(n + 1, false);
    for (ComponentIndex idx : previous.order) {
        if (idx >= 1 && idx <= n && !seen[idx]) {
            seen[idx] = true;
            repaired.order.push_back(idx);
        }
    }
    for (std::size_t idx = 1; idx <= n; ++idx) {
        if (!seen[idx]) {
            repaired.order.push_back(static_cast<ComponentIndex>(idx));
        }
    }
    return repaired;
}

OptimizationResult run_warm(const PsaConfig& config, const EvaluationContext& ctx,
                            const Layout& previous) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    PsaConfig warm = config;
    warm.initial_temperature = config.initial_temperature / warm_temperature_divisor;

    Rng rng(config.rng_seed);
    const Layout seed_layout = repair_layout(previous, ctx.size());
    std::vector<GeneratingSolution> set;
    set.reserve(config.generating_set_size);
    set.push_back(GeneratingSolution{seed_layout, evaluate(seed_layout, ctx), WeightVector{}, false});
    for (std::uint32_t k = 1; k < config.generating_set_size; ++k) {
        Layout layout = seed_layout;
        const auto moves = 1 + rng.below(3);
        for (std::uint64_t m = 0; m < moves; ++m) {
            layout = neighbor(layout, config.swap_probability, rng);
        }
        const ObjectiveVector f = evaluate(layout, ctx);
        set.push_back(GeneratingSolution{std::move(layout), f, WeightVector{}, false});
    }
    return anneal(warm, ctx, std::move(set), rng, true, started);
}

}  // namespace cabinet
