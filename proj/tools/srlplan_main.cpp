#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "srlplan/csv.hpp"
#include "srlplan/report.hpp"
#include "srlplan/scenario_io.hpp"
#include "srlplan/sim_engine.hpp"
#include "srlplan/units.hpp"

namespace {

using namespace srlplan;

struct RunArgs {
    std::string config;
    std::string out;
    std::uint64_t seed = 42;
    bool no_compensation = false;
    int oracle_points = 0;
};

struct CompareArgs {
    std::string config;
    std::string config_dir = "configs";
    std::string out_dir;
    bool all = false;
    std::uint64_t seed = 42;
};

struct OracleArgs {
    std::string config;
    int grid_points = 10001;
};

void write_csv_file(const std::string& path, const Scenario& scenario,
                    const TimeSeries& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    write_time_series_csv(out, scenario, series);
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

int cmd_run(const RunArgs& args) {
    ParsedScenario parsed = parse_scenario(args.config);
    std::cout << format_defaults_banner(parsed.applied_defaults);
    Scenario scenario = parsed.scenario;
    scenario.planner.seed = args.seed;
    if (args.no_compensation) scenario.compensation_enabled = false;
    scenario.oracle_grid_points = args.oracle_points;

    const RunResult result = run_scenario(scenario);
    write_csv_file(args.out, scenario, result.series);

    std::cout << "seed: " << args.seed << "\n";
    std::cout << format_summary(scenario, result.summary);
    std::cout << "time series: " << args.out << "\n";
    return 0;
}

struct ComparisonOutcome {
    std::string label;
    std::string banner;
    Scenario with_comp;
    Scenario without_comp;
    RunResult with_result;
    RunResult without_result;
};

ComparisonOutcome compare_one(const std::string& config, std::uint64_t seed) {
    ParsedScenario parsed = parse_scenario(config);
    ComparisonOutcome outcome;
    outcome.label = parsed.scenario.case_label;
    outcome.banner = format_defaults_banner(parsed.applied_defaults);
    outcome.with_comp = parsed.scenario;
    outcome.with_comp.planner.seed = seed;
    outcome.with_comp.compensation_enabled = true;
    outcome.without_comp = outcome.with_comp;
    outcome.without_comp.compensation_enabled = false;
    outcome.with_result = run_scenario(outcome.with_comp);
    outcome.without_result = run_scenario(outcome.without_comp);
    return outcome;
}

void print_comparison(const ComparisonOutcome& outcome, const std::string& out_dir) {
    std::cout << outcome.banner;
    std::cout << format_reduction(outcome.label,
                                  compare_runs(outcome.with_result.summary,
                                               outcome.without_result.summary));
    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        const std::string base = (fs::path(out_dir) / outcome.label).string();
        write_csv_file(base + "_with.csv", outcome.with_comp, outcome.with_result.series);
        write_csv_file(base + "_without.csv", outcome.without_comp,
                       outcome.without_result.series);
        std::cout << "time series: " << base << "_with.csv, " << base << "_without.csv\n";
    }
    std::cout << "\n";
}

int cmd_compare(const CompareArgs& args) {
    if (!args.all) {
        print_comparison(compare_one(args.config, args.seed), args.out_dir);
        return 0;
    }
    const std::vector<std::string> cases = {"case_1_1.json", "case_1_2.json", "case_2_1.json",
                                            "case_2_2.json"};
    std::vector<std::future<ComparisonOutcome>> futures;
    futures.reserve(cases.size());
    for (const std::string& name : cases) {
        const std::string path = (std::filesystem::path(args.config_dir) / name).string();
        futures.push_back(std::async(std::launch::async, compare_one, path, args.seed));
    }
    for (auto& future : futures) print_comparison(future.get(), args.out_dir);
    return 0;
}

int cmd_oracle_check(const OracleArgs& args) {
    Scenario scenario =
        args.config.empty() ? default_oracle_scenario() : parse_scenario(args.config).scenario;
    validate(scenario);

    constexpr double kMaxGapFraction = 0.02;
    const ReferenceTrajectory ref =
        make_reference_trajectory(scenario.limbs, scenario.initial_states,
                                  scenario.disturbance_limb_id, scenario.disturbance);

    const PlanDecision grid =
        grid_search_step(scenario.initial_states, scenario.limbs, scenario.human, ref, 0.0,
                         scenario.planner, args.grid_points);
    if (!grid.activated || grid.fallback) {
        std::cerr << "oracle-check: grid search did not produce a plan at t=0\n";
        return 1;
    }

    bool ok = true;
    std::cout << "instance: " << scenario.case_label << "  iterations: "
              << scenario.planner.iterations << "  grid points: " << args.grid_points << "\n";
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PlannerConfig config = scenario.planner;
        config.seed = seed;
        Xoshiro256pp rng = Xoshiro256pp::for_step(seed, 0);
        const PlanDecision random =
            plan_step(rng, scenario.initial_states, scenario.limbs, scenario.human, ref, 0.0,
                      config);
        if (!random.activated || random.fallback) {
            std::cout << "seed " << seed << ": random search produced no feasible plan\n";
            ok = false;
            continue;
        }
        const double gap = random.chosen.cost - grid.chosen.cost;
        const double pct =
            grid.chosen.cost == 0.0 ? 0.0 : 100.0 * gap / grid.chosen.cost;
        const bool within = gap <= kMaxGapFraction * grid.chosen.cost;
        char line[160];
        std::snprintf(line, sizeof line,
                      "seed %llu: random %.9g N*m, grid %.9g N*m, gap %.3g N*m (%.4g %%) %s",
                      static_cast<unsigned long long>(seed), random.chosen.cost,
                      grid.chosen.cost, gap, pct, within ? "ok" : "EXCEEDED");
        std::cout << line << "\n";
        ok = ok && within;
    }
    std::cout << (ok ? "oracle-check: PASS" : "oracle-check: FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trajectory-modification simulator for wearable multi-limb robots: "
                 "plans compensating limb motions that reduce the moment on the wearer."};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "simulate one scenario and write a CSV series");
    run->add_option("--config", run_args.config, "scenario config file")->required();
    run->add_option("--seed", run_args.seed, "planner RNG seed (default 42)");
    run->add_option("--out", run_args.out, "time-series CSV output path")->required();
    run->add_flag("--no-compensation", run_args.no_compensation,
                  "force the planner off for this run");
    run->add_option("--oracle", run_args.oracle_points,
                    "replace random search with a grid oracle of this many points per limb")
        ->check(CLI::Range(2, 100001));

    CompareArgs compare_args;
    CLI::App* compare =
        app.add_subcommand("compare", "run with and without compensation, print reductions");
    CLI::Option* config_opt =
        compare->add_option("--config", compare_args.config, "scenario config file");
    CLI::Option* all_opt = compare->add_flag("--all", compare_args.all,
                                             "compare all four bundled cases concurrently");
    compare->add_option("--config-dir", compare_args.config_dir,
                        "directory of bundled case configs (with --all)");
    compare->add_option("--seed", compare_args.seed, "planner RNG seed (default 42)");
    compare->add_option("--out-dir", compare_args.out_dir,
                        "also write per-run CSV series into this directory");
    config_opt->excludes(all_opt);

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "single-limb random-vs-grid benchmark over seeds 0..9");
    oracle->add_option("--config", oracle_args.config,
                       "scenario config (built-in instance when omitted)");
    oracle->add_option("--grid-points", oracle_args.grid_points,
                       "grid points per limb (default 10001)")
        ->check(CLI::Range(2, 10000000));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (compare->parsed()) {
            if (!compare_args.all && compare_args.config.empty()) {
                std::cerr << "error: compare needs --config or --all\n";
                return 1;
            }
            return cmd_compare(compare_args);
        }
        if (oracle->parsed()) return cmd_oracle_check(oracle_args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
