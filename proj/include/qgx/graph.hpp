#pragma once

// Labeled simple graphs as adjacency matrices. Relabeling nodes does not
// change the underlying unlabeled graph; the quotient distance is
//     LI(A, B) = min over node permutations π of H(A, π·B·πᵀ),
// counted in matrix cells (twice the edge edit distance).

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgx/metric.hpp"
#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"

namespace qgx {

/// Symmetric 0/1 matrix with zero diagonal.
class AdjMatrix {
public:
    explicit AdjMatrix(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}
    /// Row-major n×n cells; validated.
    AdjMatrix(std::size_t n, std::vector<std::uint8_t> cells);

    static AdjMatrix from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
    static AdjMatrix random(std::size_t n, double edge_probability, Rng& rng);

    std::size_t n() const noexcept { return n_; }
    bool edge(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set_edge(std::size_t i, std::size_t j, bool present);
    void flip_edge(std::size_t i, std::size_t j) { set_edge(i, j, !edge(i, j)); }

    std::span<const std::uint8_t> cells() const noexcept { return bits_; }
    std::size_t edge_count() const noexcept;
    std::size_t degree(std::size_t i) const noexcept;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool is_valid() const noexcept;

    friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

/// Bijection on {0..n-1}; node i is moved to position map[i].
class NodePermutation {
public:
    explicit NodePermutation(std::vector<std::size_t> map);
    static NodePermutation identity(std::size_t n);

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_[i]; }
    std::span<const std::size_t> map() const noexcept { return map_; }

    friend bool operator==(const NodePermutation&, const NodePermutation&) = default;

private:
    std::vector<std::size_t> map_;
};

/// result[p(i)][p(j)] = A[i][j], i.e. P·A·Pᵀ.
AdjMatrix relabel(const AdjMatrix& a, const NodePermutation& p);

/// Cell disagreements, both triangles counted.
Dist hamming(const AdjMatrix& a, const AdjMatrix& b);

enum class MatchMode { exact, heuristic };

struct MatchOptions {
    MatchMode mode = MatchMode::exact;
    /// Exact matching refuses larger graphs.
    std::size_t exact_bound = 8;
    /// Hill-climbing restarts; restart 0 starts from the degree-sorted
    /// alignment, the others from random permutations on stream Rng(seed, r).
    std::size_t restarts = 5;
    std::uint64_t seed = 0;
};

struct GraphMatch {
    NodePermutation perm;  // relabel(B, perm) is the matched copy of B
    Dist distance = 0;     // H(A, relabel(B, perm))
};

/// Matches B onto A. Exact mode is a branch-and-bound over node assignments
/// (partial mismatch + per-node cross-edge and edge-count lower bounds) and
/// returns the lexicographically first optimal permutation. Heuristic mode
/// returns a local optimum of best-improvement 2-swaps.
GraphMatch graph_match(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt = {});

Dist graph_li_distance(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt = {});

/// LI in edges rather than cells.
Dist edge_edit_distance(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt = {});

/// p2 relabeled to match p1.
AdjMatrix graph_match_normalize(const AdjMatrix& p1, const AdjMatrix& p2, const MatchOptions& opt = {});

/// Uniform crossover on the upper triangle, mirrored.
AdjMatrix graph_uniform_crossover(const AdjMatrix& a, const AdjMatrix& b, Rng& rng);

AdjMatrix graph_li_crossover(const AdjMatrix& p1, const AdjMatrix& p2, Rng& rng, const MatchOptions& opt = {});

/// Node relabeling equivalence; class_members lists all n! relabelings in
/// lexicographic order of the permutation.
EquivRelation<AdjMatrix> graph_relabeling_relation();

struct GraphLiDistance {
    MatchOptions options;
    Dist operator()(const AdjMatrix& a, const AdjMatrix& b) const { return graph_li_distance(a, b, options); }
};

struct GraphHamming {
    Dist operator()(const AdjMatrix& a, const AdjMatrix& b) const { return hamming(a, b); }
};

/// Upper-triangle bits packed row by row (requires n ≤ 11).
std::uint64_t graph_code(const AdjMatrix& a);
AdjMatrix graph_from_code(std::size_t n, std::uint64_t code);

/// All 2^(n(n-1)/2) labeled simple graphs on n nodes, ordered by code.
std::vector<AdjMatrix> enumerate_graphs(std::size_t n);

/// Number of isomorphism classes among simple graphs on n ≤ 6 nodes.
std::size_t unlabeled_graph_census(std::size_t n);

/// Planted partition: nodes split round-robin into `groups` communities;
/// edges appear with p_in inside a community and p_out across.
AdjMatrix planted_partition_graph(std::size_t n, std::size_t groups, double p_in, double p_out, std::uint64_t seed);

/// Edge-list format: first line "n m", then m lines "u v" (0-based, no self
/// loops, no repeated edges).
AdjMatrix parse_edge_list(std::istream& in, const std::string& source = "<stream>");
AdjMatrix load_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const AdjMatrix& a);

}  // namespace qgx
