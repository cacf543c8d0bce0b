// qgx: run GA experiments, benchmark replicas, and run the oracle suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qgx/errors.hpp"
#include "qgx/graph.hpp"
#include "qgx/harness/ga.hpp"
#include "qgx/verify.hpp"

namespace fs = std::filesystem;
using namespace qgx;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

fs::path sibling(const fs::path& base, const std::string& suffix) {
    fs::path p = base;
    p.replace_filename(base.stem().string() + suffix);
    return p;
}

int cmd_run(const fs::path& config, const fs::path& output, bool timing) {
    harness::RunConfig cfg = harness::load_config(config);
    if (!output.empty()) cfg.output = output;
    const auto rec = harness::run_ga(cfg, {.timing = timing});
    const std::string csv = harness::to_csv(rec);
    if (cfg.output.empty()) std::cout << csv;
    else write_file(cfg.output, csv);
    return 0;
}

int cmd_bench(const fs::path& config, std::size_t seeds, std::size_t jobs, const fs::path& output, bool timing) {
    harness::RunConfig cfg = harness::load_config(config);
    if (!output.empty()) cfg.output = output;
    if (cfg.output.empty()) throw ConfigError("output", "bench writes one file per replica and needs an output path");
    const auto bench = harness::run_bench(cfg, seeds, jobs, {.timing = timing});
    for (std::size_t r = 0; r < bench.runs.size(); ++r)
        write_file(sibling(cfg.output, "_seed" + std::to_string(bench.seeds[r]) + ".csv"),
                   harness::to_csv(bench.runs[r]));
    std::ostringstream agg;
    harness::write_aggregate_csv(agg, bench);
    const fs::path agg_path = sibling(cfg.output, "_aggregate.csv");
    write_file(agg_path, agg.str());
    std::cout << "wrote " << bench.runs.size() << " replicas and " << agg_path.string() << '\n';
    return 0;
}

int cmd_verify(const std::string& suite_name, std::uint64_t seed) {
    const auto suite = verify::parse_suite(suite_name);
    if (!suite) throw ConfigError("suite", "unknown suite '" + suite_name + "'");
    const auto results = verify::run_suite(*suite, seed, [](const verify::CheckResult& r) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << r.detail << ", "
                  << r.seconds << " s)" << std::endl;
    });
    const bool ok = verify::all_passed(results);
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    return ok ? 0 : 1;
}

int cmd_planted(std::size_t n, std::size_t groups, double p_in, double p_out, std::uint64_t seed,
                const fs::path& output) {
    const auto g = planted_partition_graph(n, groups, p_in, p_out, seed);
    std::ostringstream s;
    write_edge_list(s, g);
    if (output.empty()) std::cout << s.str();
    else write_file(output, s.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quotient geometric crossover toolkit"};
    app.require_subcommand(1);

    fs::path run_config, run_output;
    bool run_timing = false;
    auto* run = app.add_subcommand("run", "Run one GA and write its per-generation CSV");
    run->add_option("--config", run_config, "Run configuration file")->required()->check(CLI::ExistingFile);
    run->add_option("--output", run_output, "Override the configured output path");
    run->add_flag("--timing", run_timing, "Record wall-clock ms (output is then not reproducible)");

    std::string suite = "all";
    std::uint64_t verify_seed = 1;
    auto* ver = app.add_subcommand("verify", "Run oracle property suites; nonzero exit on any violation");
    ver->add_option("--suite", suite, "metric | quotient | grouping | graph | sequence | tour | fsm | all");
    ver->add_option("--seed", verify_seed, "Seed for sampled checks");

    fs::path bench_config, bench_output;
    std::size_t bench_seeds = 0, bench_jobs = 0;
    bool bench_timing = false;
    auto* bench = app.add_subcommand("bench", "Run replicas with consecutive seeds and aggregate best fitness");
    bench->add_option("--config", bench_config, "Run configuration file")->required()->check(CLI::ExistingFile);
    bench->add_option("--seeds", bench_seeds, "Number of replicas")->required()->check(CLI::PositiveNumber);
    bench->add_option("--jobs", bench_jobs, "Worker threads (0: one per core)");
    bench->add_option("--output", bench_output, "Override the configured output path");
    bench->add_flag("--timing", bench_timing, "Record wall-clock ms");

    std::size_t pl_n = 32, pl_groups = 4;
    double pl_in = 0.7, pl_out = 0.1;
    std::uint64_t pl_seed = 1;
    fs::path pl_output;
    auto* planted = app.add_subcommand("planted", "Write a planted-partition graph as an edge list");
    planted->add_option("--nodes", pl_n, "Node count")->check(CLI::PositiveNumber);
    planted->add_option("--groups", pl_groups, "Community count")->check(CLI::PositiveNumber);
    planted->add_option("--p-in", pl_in, "Edge probability inside a community")->check(CLI::Range(0.0, 1.0));
    planted->add_option("--p-out", pl_out, "Edge probability across communities")->check(CLI::Range(0.0, 1.0));
    planted->add_option("--seed", pl_seed, "Generator seed");
    planted->add_option("--output", pl_output, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_config, run_output, run_timing);
        if (*bench) return cmd_bench(bench_config, bench_seeds, bench_jobs, bench_output, bench_timing);
        if (*ver) return cmd_verify(suite, verify_seed);
        if (*planted) return cmd_planted(pl_n, pl_groups, pl_in, pl_out, pl_seed, pl_output);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
