#include "qgx/harness/ga.hpp"

#include <charconv>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include "qgx/errors.hpp"

namespace qgx::harness {
namespace {

void put_double(std::ostream& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
}

}  // namespace

RunRecord run_ga(const RunConfig& cfg, const RunOptions& opt) {
    cfg.validate();
    const AnyProblem problem = make_problem(cfg);
    return std::visit([&](const auto& p) { return evolve(p, cfg, opt); }, problem);
}

void write_csv(std::ostream& out, const RunRecord& rec) {
    out << "generation,best,mean,diversity_genotypic,diversity_quotient,ms\n";
    for (const auto& r : rec.rows) {
        out << r.generation << ',';
        put_double(out, r.best);
        out << ',';
        put_double(out, r.mean);
        out << ',';
        put_double(out, r.diversity_genotypic);
        out << ',';
        if (r.diversity_quotient) put_double(out, *r.diversity_quotient);
        out << ',';
        put_double(out, r.ms);
        out << '\n';
    }
}

std::string to_csv(const RunRecord& rec) {
    std::ostringstream s;
    write_csv(s, rec);
    return s.str();
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median: no values");
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size() / 2;
    return values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2.0;
}

BenchResult run_bench(const RunConfig& cfg, std::size_t replicas, std::size_t jobs, const RunOptions& opt) {
    if (replicas == 0) throw ConfigError("seeds", "at least one replica required");
    cfg.validate();
    // Surface configuration errors before any thread starts.
    const AnyProblem problem = make_problem(cfg);

    BenchResult out;
    out.runs.resize(replicas);
    for (std::size_t r = 0; r < replicas; ++r) out.seeds.push_back(cfg.seed + r);

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, replicas);

    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                // Static striping: replica r always goes to worker r % jobs,
                // and each writes only its own slot.
                for (std::size_t r = w; r < replicas; r += jobs) {
                    RunConfig c = cfg;
                    c.seed = out.seeds[r];
                    out.runs[r] = std::visit([&](const auto& p) { return evolve(p, c, opt); }, problem);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

void write_aggregate_csv(std::ostream& out, const BenchResult& bench) {
    out << "generation,median_best,min_best,max_best\n";
    if (bench.runs.empty()) return;
    const std::size_t rows = bench.runs.front().rows.size();
    for (std::size_t g = 0; g < rows; ++g) {
        std::vector<double> best;
        best.reserve(bench.runs.size());
        for (const auto& run : bench.runs) best.push_back(run.rows.at(g).best);
        out << g << ',';
        put_double(out, median(best));
        out << ',';
        put_double(out, *std::min_element(best.begin(), best.end()));
        out << ',';
        put_double(out, *std::max_element(best.begin(), best.end()));
        out << '\n';
    }
}

}  // namespace qgx::harness
