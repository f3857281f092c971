// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cabinet/cli.hpp"
#include "cabinet/datasets.hpp"
#include "cabinet/io.hpp"
#include "cabinet/oracle.hpp"
#include "cabinet/psa.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "reference.hpp"
#include "temp_dir.hpp"

using namespace cabinet;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

bool hot_on_top(const Placement& p, const std::vector<Component>& components) {
    for (const auto& c : components) {
        if (c.is_hot && p.at(c.index).row != 0) return false;
    }
    return true;
}

PsaConfig sample_config(double t0, std::uint64_t seed) {
    PsaConfig c;
    c.initial_temperature = t0;
    c.rng_seed = seed;
    return c;
}

// Ten seeded runs at T0 = 10000 are shared by the first two criteria.
struct SampleRuns {
    std::vector<OptimizationResult> results;
    double seconds = 0.0;
};

const SampleRuns& sample_runs_t10000() {
    static const SampleRuns runs = [] {
        SampleRuns r;
        const EvaluationContext ctx(sample15_components(), sample15_cabinet());
        const auto start = Clock::now();
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            r.results.push_back(run(sample_config(10000.0, seed), ctx));
        }
        r.seconds = seconds_since(start);
        return r;
    }();
    return runs;
}

Verdict hot_on_top_criterion() {
    const auto& runs = sample_runs_t10000();
    const auto comps = sample15_components();
    int ok = 0;
    for (const auto& r : runs.results) ok += hot_on_top(r.recommended.placement, comps) ? 1 : 0;
    return {ok >= 9 && runs.seconds <= 30.0,
            fmt("%d/10 seeds with #1,#2,#5 in row 0 (need >= 9), %.2f s total (limit 30 s)", ok, runs.seconds)};
}

Verdict improvement_criterion() {
    const auto& runs = sample_runs_t10000();
    double heat = 0.0, wire = 0.0;
    for (const auto& r : runs.results) {
        heat += r.initial_mean.heat / r.recommended.objectives.heat;
        wire += r.initial_mean.wire_mm / r.recommended.objectives.wire_mm;
    }
    heat /= 10.0;
    wire /= 10.0;
    return {heat >= 1.3 && wire >= 1.3,
            fmt("mean Initial/Final heat %.3f, wire %.3f (floor 1.3 each)", heat, wire)};
}

Verdict monotonicity_criterion() {
    const auto& high = sample_runs_t10000();
    const EvaluationContext ctx(sample15_components(), sample15_cabinet());
    double low_wire = 0.0, high_wire = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        low_wire += run(sample_config(100.0, seed), ctx).recommended.objectives.wire_mm;
        high_wire += high.results[seed - 1].recommended.objectives.wire_mm;
    }
    low_wire /= 10.0;
    high_wire /= 10.0;
    return {high_wire <= low_wire,
            fmt("mean recommended wire %.2f mm at T0=10000 vs %.2f mm at T0=100", high_wire, low_wire)};
}

Verdict oracle_criterion() {
    const EvaluationContext ctx(truncate_components(sample15_components(), 7), sample15_cabinet());
    const auto oracle_start = Clock::now();
    const OracleFront front = enumerate_pareto(ctx);
    const double oracle_seconds = seconds_since(oracle_start);
    const double best_heat = front.entries.front().objectives.heat;

    int nondominated_seeds = 0, best_matches = 0;
    double slowest = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto start = Clock::now();
        const OptimizationResult r = run(sample_config(1000.0, seed), ctx);
        slowest = std::max(slowest, seconds_since(start));
        bool all_ok = true;
        for (const auto& e : r.archive.entries()) {
            for (const auto& f : front.entries) {
                if (test::reference_dominates(f.objectives.heat, f.objectives.wire_mm, e.objectives.heat,
                                              e.objectives.wire_mm) &&
                    !nearly_equal(f.objectives, e.objectives)) {
                    all_ok = false;
                }
            }
        }
        nondominated_seeds += all_ok ? 1 : 0;
        best_matches += std::abs(r.recommended.objectives.heat - best_heat) <= 1e-9 ? 1 : 0;
    }
    const bool pass = nondominated_seeds == 10 && best_matches >= 9 && oracle_seconds < 10.0 && slowest < 5.0;
    return {pass, fmt("front of %zu over %llu layouts; archives non-dominated in %d/10 seeds, best heat matched "
                      "in %d/10 (need >= 9); oracle %.3f s (< 10 s), slowest PSA seed %.3f s (< 5 s)",
                      front.entries.size(), static_cast<unsigned long long>(front.enumerated_count),
                      nondominated_seeds, best_matches, oracle_seconds, slowest)};
}

Verdict acceptance_rule_criterion() {
    struct Case {
        ObjectiveVector s, n;
        WeightVector w;
        double t;
    };
    std::vector<Case> cases{{{10, 10}, {9, 8}, {0.5, 0.5}, 100},
                            {{10, 10}, {10, 10}, {0.5, 0.5}, 100},
                            {{10, 10}, {12, 14}, {0.5, 0.5}, 100}};
    Rng rng(20190101);
    for (int i = 0; i < 1000; ++i) {
        const double lh = rng.uniform(0.01, 0.99);
        cases.push_back({{rng.uniform(0, 20), rng.uniform(0, 5000)},
                         {rng.uniform(0, 20), rng.uniform(0, 5000)},
                         {lh, 1.0 - lh},
                         rng.uniform(1.0, 20000.0)});
    }
    double worst = 0.0;
    for (const auto& c : cases) {
        const double got = acceptance_probability(c.s, c.n, c.w, c.t);
        const double want =
            test::reference_acceptance(c.w.heat, c.w.wire, c.s.heat, c.s.wire_mm, c.n.heat, c.n.wire_mm, c.t);
        worst = std::max(worst, std::abs(got - want));
    }
    const double example = acceptance_probability({10, 10}, {12, 14}, {0.5, 0.5}, 100);
    const bool pass = worst <= 1e-12 && std::abs(example - 0.970446) < 5e-7;
    return {pass, fmt("%zu cases (3 fixed + %zu random), max |error| %.3g (limit 1e-12); exp(-0.03) case = %.7f",
                      cases.size(), cases.size() - 3, worst, example)};
}

Verdict determinism_criterion() {
    const EvaluationContext ctx(sample15_components(), sample15_cabinet());
    const std::string a = write_result_json(run(sample_config(1000.0, 77), ctx), {false});
    const std::string b = write_result_json(run(sample_config(1000.0, 77), ctx), {false});
    return {a == b, fmt("two seed-77 runs: %zu vs %zu bytes, %s", a.size(), b.size(),
                        a == b ? "identical" : "different")};
}

Verdict archive_fuzz_criterion() {
    Rng rng(4242);
    ParetoArchive archive;
    for (int i = 0; i < 100000; ++i) {
        ObjectiveVector v;
        switch (i % 3) {
            case 0: v = {static_cast<double>(rng.below(200)), static_cast<double>(rng.below(200))}; break;
            case 1: v = {rng.uniform(0, 200), rng.uniform(0, 200)}; break;
            default:
                // Near duplicates of existing points.
                if (!archive.empty()) {
                    v = archive.entries()[rng.below(archive.size())].objectives;
                    v.heat += rng.uniform(-2e-9, 2e-9);
                    v.wire_mm += rng.uniform(-2e-9, 2e-9);
                } else {
                    v = {1, 1};
                }
        }
        archive.insert(Layout{{static_cast<ComponentIndex>(i)}}, v);
    }
    std::size_t violations = 0;
    const auto& e = archive.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i == j) continue;
            const auto& a = e[i].objectives;
            const auto& b = e[j].objectives;
            if (test::reference_dominates(a.heat, a.wire_mm, b.heat, b.wire_mm)) ++violations;
            if (i < j && std::abs(a.heat - b.heat) <= 1e-9 && std::abs(a.wire_mm - b.wire_mm) <= 1e-9) ++violations;
        }
    }
    return {violations == 0,
            fmt("100000 insertions, final size %zu, %zu invariant violations", archive.size(), violations)};
}

Verdict reconfigure_criterion() {
    test::TempDir dir;
    std::ostringstream out, err;
    const std::string input = test::data_path("sample15.csv");
    if (run_cli({"optimize", "--input", input, "--t0", "10000", "--seed", "1", "--out", dir.file("prev.json")}, out,
                err) != 0) {
        return {false, "initial optimize failed: " + err.str()};
    }
    const auto start = Clock::now();
    const int code = run_cli({"reconfigure", "--input", input, "--previous", dir.file("prev.json"), "--replace",
                              "8:width=200", "--out", dir.file("next.json"), "--save-input", dir.file("edited.csv")},
                             out, err);
    const double seconds = seconds_since(start);
    if (code != 0) {
        return {false, "reconfigure exited " + std::to_string(code) + ": " + err.str()};
    }
    const CabinetDocument edited = load_document(dir.file("edited.csv"));
    const Layout layout = read_recommended_layout(test::slurp(dir.file("next.json")));
    const Placement p = pack(layout, edited.components, edited.cabinet);
    const bool top = hot_on_top(p, edited.components);
    return {seconds < 2.0 && top && edited.components[7].width_mm == 200.0,
            fmt("#8 widened to 200 mm: %.3f s (limit 2 s), hot-on-top %s", seconds, top ? "kept" : "lost")};
}

Verdict synthetic_criterion() {
    const CabinetDocument doc = load_document(test::data_path("scenario_c.csv"));
    const EvaluationContext ctx(doc.components, doc.cabinet);
    const std::size_t hot =
        static_cast<std::size_t>(std::count_if(doc.components.begin(), doc.components.end(),
                                               [](const Component& c) { return c.is_hot; }));
    PsaConfig c;
    c.initial_temperature = 10000.0;
    c.cooling_rate = 0.9999;
    c.steps_per_temperature = 2;
    int reduced = 0;
    std::uint64_t min_iterations = ~std::uint64_t{0};
    double slowest = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        c.rng_seed = seed;
        const auto start = Clock::now();
        const OptimizationResult r = run(c, ctx);
        slowest = std::max(slowest, seconds_since(start));
        min_iterations = std::min(min_iterations, r.iterations);
        reduced += r.recommended.objectives.heat < r.initial_mean.heat ? 1 : 0;
    }
    const bool pass = ctx.size() == 41 && hot == 12 && ctx.edges().size() == 88 && min_iterations >= 1000000 &&
                      slowest < 120.0 && reduced == 10;
    return {pass, fmt("%zu components/%zu hot/%zu wires; min %llu evaluations per seed (need >= 1e6), slowest seed "
                      "%.2f s (limit 120 s), heat reduced in %d/10 seeds",
                      ctx.size(), hot, ctx.edges().size(), static_cast<unsigned long long>(min_iterations), slowest,
                      reduced)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"hot-on-top", hot_on_top_criterion},
        {"improvement-trend", improvement_criterion},
        {"budget-monotonicity", monotonicity_criterion},
        {"oracle-equivalence", oracle_criterion},
        {"acceptance-rule", acceptance_rule_criterion},
        {"determinism", determinism_criterion},
        {"archive-invariant-fuzz", archive_fuzz_criterion},
        {"reconfiguration-speed", reconfigure_criterion},
        {"synthetic-scale", synthetic_criterion},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::printf("%s %-24s %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
