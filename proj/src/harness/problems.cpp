#include "qgx/harness/problems.hpp"

#include <algorithm>
#include <numeric>

#include "qgx/errors.hpp"

namespace qgx::harness {
namespace {

// Pairwise exact distances inside the diversity sample stay cheap below these.
constexpr std::size_t kExactTourDiversity = 6;
constexpr std::size_t kExactGraphDiversity = 6;
constexpr std::size_t kExactGraphFitness = 8;

MatchOptions exact_match() { return MatchOptions{.mode = MatchMode::exact}; }
MatchOptions heuristic_match() { return MatchOptions{.mode = MatchMode::heuristic}; }

}  // namespace

double fitness_partition(const KaryVector& g, const AdjMatrix& graph, double lambda) {
    if (g.size() != graph.n()) throw DimensionMismatch("fitness_partition: genotype vs node count", g.size(), graph.n());
    double cut = 0.0;
    for (const auto& [i, j] : graph.edges())
        if (g[i] != g[j]) cut += 1.0;
    const std::size_t cap = (g.size() + g.k() - 1) / g.k();
    std::vector<std::size_t> sizes(g.k() + 1, 0);
    for (int l : g.labels()) ++sizes[static_cast<std::size_t>(l)];
    double penalty = 0.0;
    for (std::size_t s : sizes)
        if (s > cap) penalty += static_cast<double>((s - cap) * (s - cap));
    return cut + lambda * penalty;
}

double fitness_tsp(const Perm& g, const TspInstance& instance) {
    if (g.size() != instance.size()) throw DimensionMismatch("fitness_tsp: tour vs city count", g.size(), instance.size());
    return static_cast<double>(instance.tour_length(g));
}

// OneMax

BitString OneMaxProblem::random_genome(Rng& rng) const {
    BitString g(length);
    for (auto& b : g) b = rng.coin() ? 1 : 0;
    return g;
}

double OneMaxProblem::fitness(const Genome& g) const {
    return static_cast<double>(std::count(g.begin(), g.end(), std::uint8_t{1}));
}

BitString OneMaxProblem::mutate(const Genome& g, double rate, Rng& rng) const { return harness::mutate(g, rate, rng); }

BitString OneMaxProblem::crossover(const Genome& a, const Genome& b, CrossoverKind, Rng& rng) const {
    Genome c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = rng.coin() ? a[i] : b[i];
    return c;
}

Dist OneMaxProblem::genotypic_distance(const Genome& a, const Genome& b) const { return Hamming{}(a, b); }

std::optional<Dist> OneMaxProblem::quotient_distance(const Genome& a, const Genome& b) const {
    return Hamming{}(a, b);
}

bool OneMaxProblem::is_valid(const Genome& g) const {
    return g.size() == length && std::ranges::all_of(g, [](std::uint8_t b) { return b <= 1; });
}

// Partition

KaryVector PartitionProblem::random_genome(Rng& rng) const { return KaryVector::random(graph.n(), k, rng); }

KaryVector PartitionProblem::mutate(const Genome& g, double rate, Rng& rng) const {
    return harness::mutate(g, rate, rng);
}

KaryVector PartitionProblem::crossover(const Genome& a, const Genome& b, CrossoverKind kind, Rng& rng) const {
    if (kind == CrossoverKind::genotypic) return uniform_crossover(a, b, rng);
    return li_crossover(a, b, rng);
}

Dist PartitionProblem::genotypic_distance(const Genome& a, const Genome& b) const { return hamming(a, b); }

std::optional<Dist> PartitionProblem::quotient_distance(const Genome& a, const Genome& b) const {
    return li_distance(a, b);
}

bool PartitionProblem::is_valid(const Genome& g) const {
    return g.is_valid() && g.size() == graph.n() && g.k() == k;
}

// TSP

Perm TspProblem::random_genome(Rng& rng) const { return Perm::random(instance.size(), rng); }

Perm TspProblem::mutate(const Genome& g, double rate, Rng& rng) const { return harness::mutate(g, rate, rng); }

Perm TspProblem::crossover(const Genome& a, const Genome& b, CrossoverKind kind, Rng& rng) const {
    const bool small = a.size() <= kDefaultReversalBound;
    switch (kind) {
        case CrossoverKind::genotypic:
            return sorting_crossover(a, b, rng, small ? ReversalMode::exact : ReversalMode::breakpoint_bound);
        case CrossoverKind::quotient:
            return reversal_crossover(a, b, rng, ReversalMode::exact);
        case CrossoverKind::quotient_heuristic:
            break;
    }
    return reversal_crossover(a, b, rng, ReversalMode::breakpoint_bound);
}

Dist TspProblem::genotypic_distance(const Genome& a, const Genome& b) const {
    if (a.size() <= kExactTourDiversity) return exact_reversal_distance(a, b);
    return reversal_distance(a, b, ReversalMode::breakpoint_bound).lower;
}

std::optional<Dist> TspProblem::quotient_distance(const Genome& a, const Genome& b) const {
    if (a.size() > kExactTourDiversity) return std::nullopt;
    return circular_reversal_distance(a, b);
}

bool TspProblem::is_valid(const Genome& g) const { return g.is_valid() && g.size() == instance.size(); }

// Sequence matching

SeqMatchProblem::SeqMatchProblem(std::vector<Seq> c) : corpus(std::move(c)), alphabet(corpus_alphabet(corpus)) {
    if (alphabet.empty()) throw InvalidRepresentation("SeqMatchProblem: corpus has no symbols");
}

Seq SeqMatchProblem::random_genome(Rng& rng) const {
    const auto [lo, hi] = std::ranges::minmax(corpus, {}, &Seq::size);
    const auto len = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(lo.size()), static_cast<std::int64_t>(hi.size())));
    Seq g(len, ' ');
    for (auto& c : g) c = alphabet[rng.below(alphabet.size())];
    return g;
}

double SeqMatchProblem::fitness(const Genome& g) const {
    Dist total = 0;
    for (const auto& s : corpus) total += edit_distance(g, s);
    return static_cast<double>(total);
}

Seq SeqMatchProblem::mutate(const Genome& g, double rate, Rng& rng) const {
    return harness::mutate(g, alphabet, rate, rng);
}

Seq SeqMatchProblem::crossover(const Genome& a, const Genome& b, CrossoverKind kind, Rng& rng) const {
    switch (kind) {
        case CrossoverKind::genotypic: return padded_uniform_crossover(a, b, rng);
        case CrossoverKind::quotient: return homologous_crossover(a, b, rng, AlignPolicy::deterministic);
        case CrossoverKind::quotient_heuristic: break;
    }
    return homologous_crossover(a, b, rng, AlignPolicy::sampled);
}

Dist SeqMatchProblem::genotypic_distance(const Genome& a, const Genome& b) const { return stretched_hamming(a, b); }

std::optional<Dist> SeqMatchProblem::quotient_distance(const Genome& a, const Genome& b) const {
    return edit_distance(a, b);
}

bool SeqMatchProblem::is_valid(const Genome& g) const {
    return std::ranges::all_of(g, [&](char c) { return alphabet.find(c) != std::string::npos; });
}

// FSM classifier learning

FsmProblem::FsmProblem(FsmTask t, std::size_t s, std::size_t max_len) : task(t), states(s), max_length(max_len) {
    if (states == 0) throw InvalidRepresentation("FsmProblem: at least one state required");
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::vector<std::size_t> w(len, 0);
        while (true) {
            int label = 0;
            if (task == FsmTask::parity) {
                label = static_cast<int>(std::accumulate(w.begin(), w.end(), std::size_t{0}) % 2);
            } else {
                std::size_t v = 0;
                for (std::size_t bit : w) v = (2 * v + bit) % 3;
                label = static_cast<int>(v);
            }
            words_.push_back(w);
            targets_.push_back(label);
            std::size_t i = len;
            while (i > 0 && w[i - 1] == 1) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
}

FsmTable FsmProblem::random_genome(Rng& rng) const { return FsmTable::random(states, 2, labels(), rng); }

double FsmProblem::fitness(const Genome& g) const {
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (g.classify(words_[i]) != targets_[i]) ++wrong;
    return static_cast<double>(wrong);
}

FsmTable FsmProblem::mutate(const Genome& g, double rate, Rng& rng) const {
    return harness::mutate(g, labels(), rate, rng);
}

FsmTable FsmProblem::crossover(const Genome& a, const Genome& b, CrossoverKind kind, Rng& rng) const {
    if (kind == CrossoverKind::genotypic) return fsm_uniform_crossover(a, b, rng);
    return fsm_crossover(a, b, rng);
}

Dist FsmProblem::genotypic_distance(const Genome& a, const Genome& b) const { return fsm_hamming(a, b); }

std::optional<Dist> FsmProblem::quotient_distance(const Genome&, const Genome&) const { return std::nullopt; }

bool FsmProblem::is_valid(const Genome& g) const {
    return g.is_valid() && g.n_states() == states && g.alphabet_size() == 2 &&
           std::ranges::all_of(g.outputs(), [&](int o) { return o >= 0 && o < labels(); });
}

// Graph matching

AdjMatrix GraphMatchProblem::random_genome(Rng& rng) const {
    const std::size_t n = target.n();
    const double pairs = static_cast<double>(n * (n - 1) / 2);
    const double density = pairs > 0 ? static_cast<double>(target.edge_count()) / pairs : 0.0;
    return AdjMatrix::random(n, density, rng);
}

double GraphMatchProblem::fitness(const Genome& g) const {
    const auto opt = target.n() <= kExactGraphFitness ? exact_match() : heuristic_match();
    return static_cast<double>(graph_li_distance(target, g, opt));
}

AdjMatrix GraphMatchProblem::mutate(const Genome& g, double rate, Rng& rng) const {
    return harness::mutate(g, rate, rng);
}

AdjMatrix GraphMatchProblem::crossover(const Genome& a, const Genome& b, CrossoverKind kind, Rng& rng) const {
    switch (kind) {
        case CrossoverKind::genotypic: return graph_uniform_crossover(a, b, rng);
        case CrossoverKind::quotient: return graph_li_crossover(a, b, rng, exact_match());
        case CrossoverKind::quotient_heuristic: break;
    }
    return graph_li_crossover(a, b, rng, heuristic_match());
}

Dist GraphMatchProblem::genotypic_distance(const Genome& a, const Genome& b) const { return hamming(a, b); }

std::optional<Dist> GraphMatchProblem::quotient_distance(const Genome& a, const Genome& b) const {
    if (a.n() > kExactGraphDiversity) return std::nullopt;
    return graph_li_distance(a, b, exact_match());
}

bool GraphMatchProblem::is_valid(const Genome& g) const { return g.is_valid() && g.n() == target.n(); }

// Construction from a config

namespace {

std::size_t require_parameter(const RepresentationId& rep, const char* what) {
    if (!rep.parameter || *rep.parameter == 0)
        throw ConfigError("representation", std::string("expected ") + rep.name + ":<" + what + ">");
    return *rep.parameter;
}

void expect_representation(const RepresentationId& rep, const std::string& name, const std::string& problem) {
    if (rep.name != name) throw ConfigError("representation", "problem " + problem + " uses '" + name + "'");
}

void require_instance(const RunConfig& cfg) {
    if (cfg.instance.empty()) throw ConfigError("instance", "problem " + cfg.problem + " needs an instance file");
}

template <typename F>
auto load_instance(const RunConfig& cfg, F&& loader) {
    require_instance(cfg);
    try {
        return loader(cfg.instance);
    } catch (const ParseError& e) {
        throw ConfigError("instance", e.what());
    }
}

}  // namespace

AnyProblem make_problem(const RunConfig& cfg) {
    const RepresentationId rep = parse_representation(cfg.representation);
    const std::string& id = cfg.problem;

    if (id == "onemax") {
        expect_representation(rep, "bitstring", id);
        return OneMaxProblem{require_parameter(rep, "length")};
    }
    if (id == "partition") {
        expect_representation(rep, "kary", id);
        PartitionProblem p{load_instance(cfg, load_edge_list), require_parameter(rep, "k")};
        if (p.graph.n() == 0) throw ConfigError("instance", "graph has no nodes");
        return p;
    }
    if (id == "tsp") {
        expect_representation(rep, "permutation", id);
        TspProblem p{load_instance(cfg, load_tsp)};
        if (p.instance.size() < 3) throw ConfigError("instance", "a tour needs at least 3 cities");
        if (cfg.crossover == CrossoverKind::quotient && p.instance.size() > kDefaultReversalBound)
            throw ConfigError("crossover", "exact quotient crossover needs at most " +
                                               std::to_string(kDefaultReversalBound) +
                                               " cities; use quotient-heuristic");
        return p;
    }
    if (id == "seqmatch") {
        expect_representation(rep, "sequence", id);
        return SeqMatchProblem(load_instance(cfg, load_sequence_corpus));
    }
    if (id == "fsm-parity" || id == "fsm-mod3") {
        expect_representation(rep, "fsm", id);
        return FsmProblem(id == "fsm-parity" ? FsmTask::parity : FsmTask::mod3, require_parameter(rep, "states"));
    }
    if (id == "graphmatch") {
        expect_representation(rep, "adjacency", id);
        GraphMatchProblem p{load_instance(cfg, load_edge_list)};
        if (cfg.crossover == CrossoverKind::quotient && p.target.n() > MatchOptions{}.exact_bound)
            throw ConfigError("crossover", "exact quotient crossover needs at most " +
                                               std::to_string(MatchOptions{}.exact_bound) +
                                               " nodes; use quotient-heuristic");
        return p;
    }
    throw ConfigError("problem", "unknown problem '" + id + "'");
}

static_assert(GaProblem<OneMaxProblem>);
static_assert(GaProblem<PartitionProblem>);
static_assert(GaProblem<TspProblem>);
static_assert(GaProblem<SeqMatchProblem>);
static_assert(GaProblem<FsmProblem>);
static_assert(GaProblem<GraphMatchProblem>);

}  // namespace qgx::harness
