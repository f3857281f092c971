#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "cabinet/bench.hpp"
#include "cabinet/cli.hpp"
#include "cabinet/datasets.hpp"
#include "cabinet/io.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "temp_dir.hpp"

using namespace cabinet;
using test::TempDir;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kSample = test::data_path("sample15.csv");

}  // namespace

TEST_CASE("optimize writes a result and an SVG") {
    TempDir dir;
    const auto r = cli({"optimize", "--input", kSample, "--t0", "100", "--seed", "3", "--out", dir.file("r.json"),
                        "--svg", dir.file("r.svg")});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(test::slurp(dir.file("r.json")));
    CHECK(j["seed"] == 3);
    CHECK(j["componentCount"] == 15);
    for (const auto& a : j["archive"]) {
        for (const auto& b : j["archive"]) {
            const double ah = a["heat"], aw = a["wireMm"], bh = b["heat"], bw = b["wireMm"];
            CHECK_FALSE((ah <= bh && aw <= bw && (ah < bh || aw < bw)));
        }
    }
    CHECK(test::slurp(dir.file("r.svg")).find("<svg") != std::string::npos);
}

TEST_CASE("optimize exit codes") {
    CHECK(cli({"optimize", "--input", "/nonexistent.csv"}).code == kExitInputError);
    CHECK(cli({"optimize", "--input", kSample, "--alpha", "1.5"}).code == kExitConfigError);
    CHECK(cli({"optimize", "--input", kSample, "--set-size", "0"}).code == kExitConfigError);
    CHECK(cli({"optimize"}).code == kExitInputError);
    CHECK(cli({"nonsense"}).code == kExitInputError);

    TempDir dir;
    const std::string bad = dir.file("bad.csv");
    std::ofstream(bad) << "#,ID,Width,Height,Depth,ConnectsTo,IsHot\n1,a,10,10,10,,2\n";
    const auto r = cli({"optimize", "--input", bad});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("ParseError") != std::string::npos);
}

TEST_CASE("optimize with identical seeds is reproducible") {
    TempDir dir;
    auto run_once = [&](const std::string& name) {
        REQUIRE(cli({"optimize", "--input", kSample, "--t0", "100", "--seed", "9", "--out", dir.file(name)}).code == 0);
        auto j = nlohmann::json::parse(test::slurp(dir.file(name)));
        j.erase("wallTimeSeconds");
        return j.dump();
    };
    CHECK(run_once("a.json") == run_once("b.json"));
}

TEST_CASE("oracle command") {
    TempDir dir;
    CHECK(cli({"oracle", "--input", kSample, "--truncate", "7", "--out", dir.file("f.json")}).code == kExitOk);
    CHECK(nlohmann::json::parse(test::slurp(dir.file("f.json")))["archive"].size() == 2);
    CHECK(cli({"oracle", "--input", kSample}).code == kExitConfigError);
    CHECK(cli({"oracle", "--input", kSample, "--truncate", "1", "--out", dir.file("one.json")}).code == kExitOk);
    CHECK(nlohmann::json::parse(test::slurp(dir.file("one.json")))["archive"].size() == 1);
}

TEST_CASE("reconfigure") {
    TempDir dir;
    REQUIRE(cli({"optimize", "--input", kSample, "--t0", "1000", "--seed", "1", "--out", dir.file("prev.json")}).code ==
            0);

    SUBCASE("widen a component") {
        const auto r = cli({"reconfigure", "--input", kSample, "--previous", dir.file("prev.json"), "--replace",
                            "8:width=200", "--out", dir.file("next.json"), "--save-input", dir.file("edited.csv")});
        REQUIRE(r.code == kExitOk);
        CHECK(std::filesystem::exists(dir.file("next.svg")));
        const auto j = nlohmann::json::parse(test::slurp(dir.file("next.json")));
        CHECK(j["warmStart"] == true);
        const auto edited = load_document(dir.file("edited.csv"));
        CHECK(edited.components[7].width_mm == 200.0);
    }
    SUBCASE("mark a component hot") {
        const auto r = cli({"reconfigure", "--input", kSample, "--previous", dir.file("prev.json"), "--replace",
                            "6:isHot=1", "--out", dir.file("hot.json"), "--svg", dir.file("hot.svg")});
        REQUIRE(r.code == kExitOk);
        const std::string svg = test::slurp(dir.file("hot.svg"));
        CHECK(svg.find("class=\"component hot\" data-index=\"6\"") != std::string::npos);
    }
    SUBCASE("errors") {
        CHECK(cli({"reconfigure", "--input", kSample, "--previous", dir.file("prev.json"), "--replace",
                   "99:width=10", "--out", dir.file("x.json")})
                  .code == kExitInputError);
        CHECK(cli({"reconfigure", "--input", kSample, "--previous", dir.file("prev.json"), "--replace",
                   "8:colour=red", "--out", dir.file("x.json")})
                  .code == kExitInputError);
        CHECK(cli({"reconfigure", "--input", kSample, "--previous", dir.file("prev.json"), "--replace",
                   "8:width=-5", "--out", dir.file("x.json")})
                  .code == kExitInputError);
        CHECK(cli({"reconfigure", "--input", kSample, "--previous", dir.file("missing.json"), "--replace",
                   "8:width=200", "--out", dir.file("x.json")})
                  .code == kExitInputError);
    }
}

TEST_CASE("render command reproduces the optimize SVG") {
    TempDir dir;
    REQUIRE(cli({"optimize", "--input", kSample, "--t0", "50", "--out", dir.file("r.json"), "--svg",
                 dir.file("a.svg")})
                .code == 0);
    REQUIRE(cli({"render", "--input", kSample, "--result", dir.file("r.json"), "--out", dir.file("b.svg")}).code == 0);
    CHECK(test::slurp(dir.file("a.svg")) == test::slurp(dir.file("b.svg")));
}

TEST_CASE("generate command") {
    TempDir dir;
    REQUIRE(cli({"generate", "--scenario", "C", "--seed", "5", "--out", dir.file("c.csv")}).code == 0);
    const auto doc = load_document(dir.file("c.csv"));
    CHECK(doc.components.size() == 41);
    CHECK(normalize_edges(doc.components).size() == 88);
    CHECK(std::count_if(doc.components.begin(), doc.components.end(), [](const auto& c) { return c.is_hot; }) == 12);
    CHECK(cli({"generate", "--scenario", "Z", "--out", dir.file("z.csv")}).code == kExitInputError);
}

TEST_CASE("bench command") {
    TempDir dir;
    const auto r = cli({"bench", "--input", kSample, "--t0-list", "20,200", "--runs", "1", "--out",
                        dir.file("b.json")});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("T0") != std::string::npos);
    const auto j = nlohmann::json::parse(test::slurp(dir.file("b.json")));
    REQUIRE(j["summaries"].size() == 2);
    for (const auto& s : j["summaries"]) {
        CHECK(s["heatImprovement"]["min"] == s["heatImprovement"]["mean"]);
        CHECK(s["heatImprovement"]["max"] == s["heatImprovement"]["mean"]);
        CHECK(s["wireImprovement"]["min"] == s["wireImprovement"]["max"]);
    }
    CHECK(j["summaries"][1]["meanIterations"].get<double>() > j["summaries"][0]["meanIterations"].get<double>());
}

TEST_CASE("improvement_ratio") {
    CHECK(improvement_ratio(4, 2) == 2.0);
    CHECK(improvement_ratio(0, 0) == 1.0);
    CHECK(std::isinf(improvement_ratio(3, 0)));
}

TEST_CASE("benchmark thread count does not change results") {
    const EvaluationContext ctx(sample15_components(), sample15_cabinet());
    BenchmarkPlan plan;
    plan.base.cooling_rate = 0.99;
    plan.initial_temperatures = {30.0, 60.0};
    plan.runs = 3;
    plan.threads = 1;
    const auto serial = run_benchmark(plan, ctx);
    plan.threads = 4;
    const auto parallel = run_benchmark(plan, ctx);
    CHECK(benchmark_json(serial, "x", false) == benchmark_json(parallel, "x", false));
}
