#pragma once

// Benchmark problems. Each one fixes a genotype type, a fitness, and the
// mapping from crossover id to operator:
//
//   genotypic           plain operator on the raw genotype
//   quotient            normalize the second parent, then the same operator
//                       (exact normalization where it is expensive)
//   quotient-heuristic  as quotient, with the cheaper normalization

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgx/fsm.hpp"
#include "qgx/graph.hpp"
#include "qgx/grouping.hpp"
#include "qgx/harness/config.hpp"
#include "qgx/harness/mutation.hpp"
#include "qgx/rng.hpp"
#include "qgx/sequence.hpp"
#include "qgx/tour.hpp"

namespace qgx::harness {

inline constexpr double kDefaultBalancePenalty = 2.0;

/// Cut edges plus lambda * sum over groups of max(0, |group| - ceil(n/k))^2.
double fitness_partition(const KaryVector& g, const AdjMatrix& graph, double lambda = kDefaultBalancePenalty);

/// Closed tour length under the instance's rounded Euclidean metric.
double fitness_tsp(const Perm& g, const TspInstance& instance);

template <typename P>
concept GaProblem = requires(const P& p, const typename P::Genome& g, Rng& rng, CrossoverKind k, double rate) {
    { P::maximize } -> std::convertible_to<bool>;
    { p.random_genome(rng) } -> std::same_as<typename P::Genome>;
    { p.fitness(g) } -> std::convertible_to<double>;
    { p.mutate(g, rate, rng) } -> std::same_as<typename P::Genome>;
    { p.crossover(g, g, k, rng) } -> std::same_as<typename P::Genome>;
    { p.genotypic_distance(g, g) } -> std::convertible_to<Dist>;
    { p.quotient_distance(g, g) } -> std::same_as<std::optional<Dist>>;
    { p.is_valid(g) } -> std::convertible_to<bool>;
};

struct OneMaxProblem {
    using Genome = BitString;
    static constexpr bool maximize = true;
    std::size_t length = 0;

    Genome random_genome(Rng& rng) const;
    double fitness(const Genome& g) const;
    Genome mutate(const Genome& g, double rate, Rng& rng) const;
    /// Uniform crossover for every id; the quotient is trivial.
    Genome crossover(const Genome& a, const Genome& b, CrossoverKind k, Rng& rng) const;
    Dist genotypic_distance(const Genome& a, const Genome& b) const;
    std::optional<Dist> quotient_distance(const Genome& a, const Genome& b) const;
    bool is_valid(const Genome& g) const;
};

struct PartitionProblem {
    using Genome = KaryVector;
    static constexpr bool maximize = false;
    AdjMatrix graph;
    std::size_t k = 2;
    double lambda = kDefaultBalancePenalty;

    Genome random_genome(Rng& rng) const;
    double fitness(const Genome& g) const { return fitness_partition(g, graph, lambda); }
    Genome mutate(const Genome& g, double rate, Rng& rng) const;
    Genome crossover(const Genome& a, const Genome& b, CrossoverKind k, Rng& rng) const;
    Dist genotypic_distance(const Genome& a, const Genome& b) const;
    std::optional<Dist> quotient_distance(const Genome& a, const Genome& b) const;
    bool is_valid(const Genome& g) const;
};

struct TspProblem {
    using Genome = Perm;
    static constexpr bool maximize = false;
    TspInstance instance;

    Genome random_genome(Rng& rng) const;
    double fitness(const Genome& g) const { return fitness_tsp(g, instance); }
    Genome mutate(const Genome& g, double rate, Rng& rng) const;
    /// Exact walks need n <= kDefaultReversalBound; genotypic falls back to
    /// the breakpoint walk above that size.
    Genome crossover(const Genome& a, const Genome& b, CrossoverKind k, Rng& rng) const;
    /// Exact reversal distance for small n, breakpoint lower bound otherwise.
    Dist genotypic_distance(const Genome& a, const Genome& b) const;
    std::optional<Dist> quotient_distance(const Genome& a, const Genome& b) const;
    bool is_valid(const Genome& g) const;
};

struct SeqMatchProblem {
    using Genome = Seq;
    static constexpr bool maximize = false;
    std::vector<Seq> corpus;
    std::string alphabet;

    explicit SeqMatchProblem(std::vector<Seq> corpus);

    Genome random_genome(Rng& rng) const;
    /// Sum of edit distances to the corpus.
    double fitness(const Genome& g) const;
    Genome mutate(const Genome& g, double rate, Rng& rng) const;
    /// quotient: deterministic alignment; quotient-heuristic: sampled.
    Genome crossover(const Genome& a, const Genome& b, CrossoverKind k, Rng& rng) const;
    Dist genotypic_distance(const Genome& a, const Genome& b) const;
    std::optional<Dist> quotient_distance(const Genome& a, const Genome& b) const;
    bool is_valid(const Genome& g) const;
};

enum class FsmTask { parity, mod3 };

struct FsmProblem {
    using Genome = FsmTable;
    static constexpr bool maximize = false;
    FsmTask task = FsmTask::parity;
    std::size_t states = 4;
    std::size_t max_length = 8;

    FsmProblem(FsmTask task, std::size_t states, std::size_t max_length = 8);

    int labels() const noexcept { return task == FsmTask::parity ? 2 : 3; }
    Genome random_genome(Rng& rng) const;
    /// Misclassified binary strings of length 0..max_length.
    double fitness(const Genome& g) const;
    Genome mutate(const Genome& g, double rate, Rng& rng) const;
    Genome crossover(const Genome& a, const Genome& b, CrossoverKind k, Rng& rng) const;
    Dist genotypic_distance(const Genome& a, const Genome& b) const;
    /// No tractable exact quotient distance.
    std::optional<Dist> quotient_distance(const Genome& a, const Genome& b) const;
    bool is_valid(const Genome& g) const;

private:
    std::vector<std::vector<std::size_t>> words_;
    std::vector<int> targets_;
};

struct GraphMatchProblem {
    using Genome = AdjMatrix;
    static constexpr bool maximize = false;
    AdjMatrix target;

    Genome random_genome(Rng& rng) const;
    /// LI distance to the target; exact for n <= 8, heuristic above.
    double fitness(const Genome& g) const;
    Genome mutate(const Genome& g, double rate, Rng& rng) const;
    /// quotient: exact matching (n <= 8); quotient-heuristic: hill climbing.
    Genome crossover(const Genome& a, const Genome& b, CrossoverKind k, Rng& rng) const;
    Dist genotypic_distance(const Genome& a, const Genome& b) const;
    std::optional<Dist> quotient_distance(const Genome& a, const Genome& b) const;
    bool is_valid(const Genome& g) const;
};

using AnyProblem =
    std::variant<OneMaxProblem, PartitionProblem, TspProblem, SeqMatchProblem, FsmProblem, GraphMatchProblem>;

/// Builds the problem named by cfg, loading its instance. Unknown ids,
/// mismatched representations and unusable instances throw ConfigError.
AnyProblem make_problem(const RunConfig& cfg);

}  // namespace qgx::harness
