#pragma once

// Generational GA: tournament selection, elitism 1, crossover then mutation.
//
// Random streams under cfg.seed (population size N):
//   generation g, slot i in [0, N)  ->  stream g * (N + 1) + i
//   generation g, diversity sample  ->  stream g * (N + 1) + N
// Generation 0 is the random initial population. Slot 0 of every later
// generation holds the elite and draws nothing.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgx/harness/config.hpp"
#include "qgx/harness/problems.hpp"
#include "qgx/rng.hpp"

namespace qgx::harness {

inline constexpr std::size_t kDiversitySample = 16;

#ifdef NDEBUG
inline constexpr bool kCheckOffspring = false;
#else
inline constexpr bool kCheckOffspring = true;
#endif

struct GenerationRow {
    std::size_t generation = 0;
    double best = 0.0;
    double mean = 0.0;
    double diversity_genotypic = 0.0;
    std::optional<double> diversity_quotient;
    double ms = 0.0;
};

struct RunRecord {
    bool maximize = false;
    std::vector<GenerationRow> rows;

    double final_best() const { return rows.empty() ? 0.0 : rows.back().best; }
};

struct RunOptions {
    /// Fill the ms column with elapsed wall-clock time. Off by default so
    /// repeated runs produce byte-identical CSV.
    bool timing = false;
    std::size_t diversity_sample = kDiversitySample;
};

inline std::uint64_t ga_stream(std::size_t generation, std::size_t slot, std::size_t population) {
    return static_cast<std::uint64_t>(generation) * (population + 1) + slot;
}

namespace detail {

template <GaProblem P>
std::pair<double, std::optional<double>> diversity(const P& problem, const std::vector<typename P::Genome>& pop,
                                                   std::size_t sample, Rng& rng) {
    std::vector<std::size_t> idx(pop.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const std::size_t m = std::min(sample, idx.size());
    // Partial Fisher-Yates: the first m entries are a uniform sample.
    for (std::size_t i = 0; i < m; ++i) std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);

    double g_sum = 0.0, q_sum = 0.0;
    bool q_ok = true;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const auto& x = pop[idx[a]];
            const auto& y = pop[idx[b]];
            g_sum += static_cast<double>(problem.genotypic_distance(x, y));
            if (q_ok) {
                const auto q = problem.quotient_distance(x, y);
                if (q) q_sum += static_cast<double>(*q);
                else q_ok = false;
            }
            ++pairs;
        }
    if (pairs == 0) return {0.0, q_ok ? std::optional<double>(0.0) : std::nullopt};
    const double p = static_cast<double>(pairs);
    return {g_sum / p, q_ok ? std::optional<double>(q_sum / p) : std::nullopt};
}

}  // namespace detail

template <GaProblem P>
RunRecord evolve(const P& problem, const RunConfig& cfg, const RunOptions& opt = {}) {
    cfg.validate();
    using Genome = typename P::Genome;
    const std::size_t n = cfg.population;
    const auto t0 = std::chrono::steady_clock::now();
    auto better = [](double a, double b) { return P::maximize ? a > b : a < b; };

    std::vector<Genome> pop;
    std::vector<double> fit;
    pop.reserve(n);
    fit.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng(cfg.seed, ga_stream(0, i, n));
        pop.push_back(problem.random_genome(rng));
        fit.push_back(problem.fitness(pop.back()));
    }

    RunRecord rec;
    rec.maximize = P::maximize;
    auto record = [&](std::size_t gen) {
        GenerationRow row;
        row.generation = gen;
        row.best = fit[0];
        double sum = 0.0;
        for (double f : fit) {
            if (better(f, row.best)) row.best = f;
            sum += f;
        }
        row.mean = sum / static_cast<double>(n);
        Rng rng(cfg.seed, ga_stream(gen, n, n));
        std::tie(row.diversity_genotypic, row.diversity_quotient) =
            detail::diversity(problem, pop, opt.diversity_sample, rng);
        if (opt.timing)
            row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rec.rows.push_back(row);
    };
    record(0);

    auto tournament = [&](Rng& rng) -> std::size_t {
        std::size_t best = rng.below(n);
        for (std::size_t t = 1; t < cfg.tournament; ++t) {
            const std::size_t c = rng.below(n);
            if (better(fit[c], fit[best])) best = c;
        }
        return best;
    };

    std::vector<Genome> next;
    std::vector<double> next_fit;
    for (std::size_t gen = 1; gen <= cfg.generations; ++gen) {
        next.clear();
        next_fit.clear();
        std::size_t elite = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (better(fit[i], fit[elite])) elite = i;
        next.push_back(pop[elite]);
        next_fit.push_back(fit[elite]);

        for (std::size_t i = 1; i < n; ++i) {
            Rng rng(cfg.seed, ga_stream(gen, i, n));
            const std::size_t a = tournament(rng);
            const std::size_t b = tournament(rng);
            Genome child = rng.chance(cfg.crossover_rate) ? problem.crossover(pop[a], pop[b], cfg.crossover, rng)
                                                          : pop[a];
            child = problem.mutate(child, cfg.mutation_rate, rng);
            if constexpr (kCheckOffspring) {
                if (!problem.is_valid(child))
                    throw std::logic_error("evolve: offspring violates representation invariants at generation " +
                                           std::to_string(gen));
            }
            next_fit.push_back(problem.fitness(child));
            next.push_back(std::move(child));
        }
        std::swap(pop, next);
        std::swap(fit, next_fit);
        record(gen);
    }
    return rec;
}

/// Builds the configured problem and evolves it.
RunRecord run_ga(const RunConfig& cfg, const RunOptions& opt = {});

/// Writes the CSV header and one row per generation. Doubles use the
/// shortest round-trip representation; an untractable quotient diversity
/// is an empty field.
void write_csv(std::ostream& out, const RunRecord& rec);
std::string to_csv(const RunRecord& rec);

struct BenchResult {
    std::vector<std::uint64_t> seeds;
    std::vector<RunRecord> runs;
};

/// Runs `replicas` copies of cfg with seeds cfg.seed, cfg.seed + 1, ...
/// on up to `jobs` threads (0: hardware concurrency). Results are indexed
/// by replica, independent of scheduling.
BenchResult run_bench(const RunConfig& cfg, std::size_t replicas, std::size_t jobs = 0, const RunOptions& opt = {});

/// Per-generation median, minimum and maximum of best fitness across runs.
void write_aggregate_csv(std::ostream& out, const BenchResult& bench);

double median(std::vector<double> values);

}  // namespace qgx::harness
