#include "cabinet/cli.hpp"

#include <pthread.h>

#include <charconv>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cabinet/bench.hpp"
#include "cabinet/datasets.hpp"
#include "cabinet/io.hpp"
#include "cabinet/oracle.hpp"
#include "cabinet/psa.hpp"
#include "cabinet/service.hpp"
#include "number_format.hpp"

namespace cabinet {

namespace {

using detail::format_number;

/// Flags shared by every subcommand that loads a cabinet.
struct InputFlags {
    std::string path;
    std::string format;
    std::size_t truncate = 0;

    void attach(CLI::App& app) {
        app.add_option("--input", path, "Cabinet description (.csv or .json)")->required();
        app.add_option("--format", format, "Input format: csv or json (default: by extension)")
            ->check(CLI::IsMember({"csv", "json"}));
        app.add_option("--truncate", truncate,
                       "Keep components 1..k only, dropping connections beyond k");
    }

    CabinetDocument load() const {
        CabinetDocument doc = load_document(path, format);
        if (truncate > 0 && truncate < doc.components.size()) {
            doc.components = validate_components(truncate_components(doc.components, truncate));
        }
        return doc;
    }
};

void attach_config(CLI::App& app, PsaConfig& config, bool with_temperature_and_seed) {
    if (with_temperature_and_seed) {
        app.add_option("--t0", config.initial_temperature, "Initial temperature");
        app.add_option("--seed", config.rng_seed, "Random seed");
    }
    app.add_option("--alpha", config.cooling_rate, "Geometric cooling rate in (0,1)");
    app.add_option("--steps", config.steps_per_temperature, "Sweeps per temperature level");
    app.add_option("--set-size", config.generating_set_size, "Generating set size");
    app.add_option("--c", config.weight_constant, "Weight adaptation constant (> 1)");
    app.add_option("--weight-floor", config.weight_floor, "Lower bound of each objective weight");
    app.add_option("--swap-prob", config.swap_probability,
                   "Probability of a swap move (otherwise shift)");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string svg_path_for(const std::string& out_path) {
    return std::filesystem::path(out_path).replace_extension(".svg").string();
}

void print_summary(std::ostream& out, const OptimizationResult& r) {
    out << "heat=" << format_number(r.recommended.objectives.heat)
        << " wire_mm=" << format_number(r.recommended.objectives.wire_mm)
        << " iterations=" << r.iterations << " fraction=" << r.fraction_of_space
        << " seconds=" << r.wall_time_seconds << '\n';
}

void write_outputs(const OptimizationResult& result, const EvaluationContext& ctx,
                   const std::string& out_path, const std::string& svg_path) {
    if (!out_path.empty()) {
        write_file(out_path, write_result_json(result));
    }
    if (!svg_path.empty()) {
        write_file(svg_path, render_svg(result.recommended.placement, ctx.components(),
                                        result.recommended.objectives));
    }
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
            throw ParseError(0, 0, "--t0-list", "expected comma-separated numbers, got '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ParseError(0, 0, "--t0-list", "empty list");
    }
    return out;
}

struct FieldEdit {
    ComponentIndex index = 0;
    ComponentEdit edit;
};

double parse_edit_number(const std::string& value, const std::string& field) {
    double v = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (value.empty() || res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw ParseError(0, 0, "--replace", field + ": invalid value '" + value + "'");
    }
    return v;
}

/// "8:width=200,height=150,6:isHot=1": an "index:" prefix switches the target
/// component for the items that follow.
std::vector<FieldEdit> parse_replacements(const std::vector<std::string>& specs) {
    std::vector<FieldEdit> edits;
    for (const auto& spec : specs) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon != std::string::npos) {
                const std::string idx = item.substr(0, colon);
                ComponentIndex index = 0;
                const auto res = std::from_chars(idx.data(), idx.data() + idx.size(), index);
                if (idx.empty() || res.ec != std::errc{} || res.ptr != idx.data() + idx.size()) {
                    throw ParseError(0, 0, "--replace", "invalid component index '" + idx + "'");
                }
                edits.push_back(FieldEdit{index, {}});
                item = item.substr(colon + 1);
            }
            if (edits.empty()) {
                throw ParseError(0, 0, "--replace", "expected <index>:<field>=<value>, got '" + item + "'");
            }
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw ParseError(0, 0, "--replace", "expected <field>=<value>, got '" + item + "'");
            }
            const std::string field = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            ComponentEdit& e = edits.back().edit;
            if (field == "width") {
                e.width_mm = parse_edit_number(value, field);
            } else if (field == "height") {
                e.height_mm = parse_edit_number(value, field);
            } else if (field == "depth") {
                e.depth_mm = parse_edit_number(value, field);
            } else if (field == "isHot") {
                if (value != "0" && value != "1" && value != "true" && value != "false") {
                    throw ParseError(0, 0, "--replace", "isHot: invalid value '" + value + "'");
                }
                e.is_hot = value == "1" || value == "true";
            } else if (field == "connectsTo") {
                std::vector<ComponentIndex> targets;
                std::stringstream ts(value);
                std::string t;
                while (std::getline(ts, t, ';')) {
                    targets.push_back(static_cast<ComponentIndex>(parse_edit_number(t, field)));
                }
                e.connects_to = std::move(targets);
            } else {
                throw Error("UnknownField: '" + field +
                            "' (expected width, height, depth, isHot or connectsTo)");
            }
        }
    }
    return edits;
}

/// Maps library errors onto the documented exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidConfig& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-objective control cabinet layout optimizer", "cabinet_psa"};
    app.require_subcommand(1);

    // optimize
    InputFlags opt_input;
    PsaConfig opt_config;
    std::string opt_out, opt_svg;
    auto* optimize = app.add_subcommand("optimize", "Anneal a cabinet layout");
    opt_input.attach(*optimize);
    attach_config(*optimize, opt_config, true);
    optimize->add_option("--out", opt_out, "Result JSON path");
    optimize->add_option("--svg", opt_svg, "Layout SVG path");

    // bench
    InputFlags bench_input;
    PsaConfig bench_config;
    std::string bench_t0 = "100,1000,10000";
    std::size_t bench_runs = 10;
    std::uint64_t bench_seed_base = 1;
    std::size_t bench_threads = 0;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Repeat runs per initial temperature and report improvements");
    bench_input.attach(*bench);
    attach_config(*bench, bench_config, false);
    bench->add_option("--t0-list", bench_t0, "Comma-separated initial temperatures");
    bench->add_option("--runs", bench_runs, "Runs per temperature (seeds seed-base..)");
    bench->add_option("--seed-base", bench_seed_base, "First seed");
    bench->add_option("--threads", bench_threads, "Worker threads (default: CABINET_PSA_THREADS or cores)");
    bench->add_option("--out", bench_out, "Report JSON path");

    // reconfigure
    InputFlags rec_input;
    PsaConfig rec_config;
    std::string rec_previous, rec_out, rec_svg, rec_saved_input;
    std::vector<std::string> rec_replace;
    auto* reconfigure = app.add_subcommand("reconfigure", "Edit components and warm-start re-optimization");
    rec_input.attach(*reconfigure);
    attach_config(*reconfigure, rec_config, true);
    reconfigure->add_option("--previous", rec_previous, "Result JSON of the previous optimization")->required();
    reconfigure->add_option("--replace", rec_replace, "<index>:<field>=<value>[,...]; fields width, height, depth, isHot, connectsTo")
        ->required();
    reconfigure->add_option("--out", rec_out, "Result JSON path")->required();
    reconfigure->add_option("--svg", rec_svg, "Layout SVG path (default: --out with .svg)");
    reconfigure->add_option("--save-input", rec_saved_input, "Write the edited cabinet description (CSV)");

    // oracle
    InputFlags orc_input;
    std::size_t orc_max_n = default_oracle_max_n;
    std::string orc_out;
    auto* oracle = app.add_subcommand("oracle", "Exact Pareto front by exhaustive enumeration");
    orc_input.attach(*oracle);
    oracle->add_option("--max-n", orc_max_n, "Refuse inputs larger than this");
    oracle->add_option("--out", orc_out, "Front JSON path");

    // render
    InputFlags ren_input;
    std::string ren_result, ren_out;
    auto* render = app.add_subcommand("render", "Render a result's recommended layout to SVG");
    ren_input.attach(*render);
    render->add_option("--result", ren_result, "Result JSON")->required();
    render->add_option("--out", ren_out, "SVG path")->required();

    // generate
    std::string gen_scenario, gen_out, gen_format = "csv";
    std::uint64_t gen_seed = 2019;
    auto* generate = app.add_subcommand("generate", "Write a synthetic cabinet with benchmark A/B/C counts");
    generate->add_option("--scenario", gen_scenario, "A, B or C")->required();
    generate->add_option("--seed", gen_seed, "Generator seed");
    generate->add_option("--out", gen_out, "Output path")->required();
    generate->add_option("--format", gen_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // serve
    ServiceOptions srv_options;
    std::string srv_host = "127.0.0.1";
    int srv_port = 8099;
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--host", srv_host, "Bind address");
    serve->add_option("--port", srv_port, "Port");
    serve->add_option("--workers", srv_options.workers, "Optimization worker threads");
    serve->add_option("--cors-origin", srv_options.cors_origin, "Allowed CORS origin");
    serve->add_option("--snapshot", srv_options.snapshot_path, "Write stored cabinets here on shutdown");

    std::vector<std::string> argv_storage{"cabinet_psa"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (optimize->parsed()) {
        return guarded(err, [&] {
            validate(opt_config);
            const CabinetDocument doc = opt_input.load();
            const EvaluationContext ctx(doc.components, doc.cabinet);
            const OptimizationResult result = run(opt_config, ctx);
            write_outputs(result, ctx, opt_out, opt_svg);
            print_summary(out, result);
            return kExitOk;
        });
    }

    if (bench->parsed()) {
        return guarded(err, [&] {
            BenchmarkPlan plan;
            plan.base = bench_config;
            plan.initial_temperatures = parse_real_list(bench_t0);
            plan.runs = bench_runs;
            plan.seed_base = bench_seed_base;
            plan.threads = bench_threads;
            for (double t0 : plan.initial_temperatures) {
                PsaConfig probe = plan.base;
                probe.initial_temperature = t0;
                validate(probe);
            }
            const CabinetDocument doc = bench_input.load();
            const EvaluationContext ctx(doc.components, doc.cabinet);
            const BenchmarkReport report = run_benchmark(plan, ctx);
            const std::string json = benchmark_json(report, bench_input.path);
            if (!bench_out.empty()) {
                write_file(bench_out, json);
            }
            out << benchmark_table(report);
            return kExitOk;
        });
    }

    if (reconfigure->parsed()) {
        return guarded(err, [&] {
            validate(rec_config);
            CabinetDocument doc = rec_input.load();
            const Layout previous = read_recommended_layout(read_file(rec_previous));
            for (const auto& e : parse_replacements(rec_replace)) {
                doc = apply_edit(doc, e.index, e.edit);
            }
            if (!rec_saved_input.empty()) {
                write_file(rec_saved_input, write_components_csv(doc));
            }
            const EvaluationContext ctx(doc.components, doc.cabinet);
            const OptimizationResult result = run_warm(rec_config, ctx, previous);
            write_outputs(result, ctx, rec_out, rec_svg.empty() ? svg_path_for(rec_out) : rec_svg);
            out << "re-optimization took " << result.wall_time_seconds << " s\n";
            print_summary(out, result);
            return kExitOk;
        });
    }

    if (oracle->parsed()) {
        return guarded(err, [&] {
            const CabinetDocument doc = orc_input.load();
            const EvaluationContext ctx(doc.components, doc.cabinet);
            const OracleFront front = enumerate_pareto(ctx, orc_max_n);
            if (!orc_out.empty()) {
                write_file(orc_out, write_oracle_json(front, ctx));
            }
            out << "front=" << front.entries.size() << " enumerated=" << front.enumerated_count
                << " best_heat=" << format_number(front.entries.front().objectives.heat)
                << " best_wire_mm=" << format_number(front.entries.front().objectives.wire_mm) << '\n';
            return kExitOk;
        });
    }

    if (render->parsed()) {
        return guarded(err, [&] {
            const CabinetDocument doc = ren_input.load();
            const EvaluationContext ctx(doc.components, doc.cabinet);
            const Layout layout = read_recommended_layout(read_file(ren_result));
            if (!is_permutation_of(layout, ctx.size())) {
                throw Error("result layout does not match the cabinet's components");
            }
            const Placement placement = pack(layout, ctx.components(), ctx.cabinet());
            write_file(ren_out, render_svg(placement, ctx.components(), evaluate(layout, ctx)));
            return kExitOk;
        });
    }

    if (generate->parsed()) {
        return guarded(err, [&] {
            const ScenarioShape& shape = benchmark_shape(gen_scenario);
            CabinetDocument doc;
            doc.cabinet = sample15_cabinet();
            doc.cabinet.name = "synthetic-" + shape.name;
            doc.components = synthetic_components(shape, gen_seed);
            write_file(gen_out, gen_format == "json" ? write_components_json(doc)
                                                     : write_components_csv(doc));
            return kExitOk;
        });
    }

    if (serve->parsed()) {
        return guarded(err, [&] {
            // SIGINT/SIGTERM are taken by a watcher thread so the service can
            // shut down cleanly and write its snapshot.
            sigset_t signals;
            sigemptyset(&signals);
            sigaddset(&signals, SIGINT);
            sigaddset(&signals, SIGTERM);
            pthread_sigmask(SIG_BLOCK, &signals, nullptr);

            CabinetServer server(srv_options);
            const int port = server.bind(srv_host, srv_port);
            if (port < 0) {
                throw Error("cannot listen on " + srv_host + ":" + std::to_string(srv_port));
            }
            std::thread watcher([&] {
                int sig = 0;
                sigwait(&signals, &sig);
                server.stop();
            });
            out << "listening on http://" << srv_host << ':' << port << std::endl;
            server.listen_after_bind();
            pthread_kill(watcher.native_handle(), SIGTERM);
            watcher.join();
            return kExitOk;
        });
    }
    return kExitInputError;
}

}  // namespace cabinet
