#pragma once

// Tours as simple permutations read circularly. Genotypic distance is the
// reversal (2-opt) distance between linear permutations; rotations of the
// same permutation describe the same tour.

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

/// Permutation of {0..n-1}.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> order);

    static Perm identity(std::size_t n);
    static Perm random(std::size_t n, Rng& rng);

    std::size_t size() const noexcept { return order_.size(); }
    int operator[](std::size_t i) const { return order_[i]; }
    std::span<const int> order() const noexcept { return order_; }

    bool is_valid() const noexcept;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> order_;
};

/// rotate(p, s)[i] = p[(i + s) mod n].
Perm rotate(const Perm& p, std::size_t shift);
/// The rotation that starts with city 0.
Perm canonical_rotation(const Perm& p);
/// Same tour traversed backwards, canonical rotation.
Perm reflect(const Perm& p);
/// Reverses positions first..last inclusive.
Perm reverse_segment(const Perm& p, std::size_t first, std::size_t last);

/// Adjacent pairs (with 0 and n+1 framing) of a relative to b that are not
/// consecutive; each reversal removes at most two.
std::size_t breakpoints(const Perm& a, const Perm& b);

enum class ReversalMode { exact, breakpoint_bound };

struct ReversalDistance {
    Dist lower = 0;
    Dist upper = 0;
    bool exact() const noexcept { return lower == upper; }
};

inline constexpr std::size_t kDefaultReversalBound = 8;

/// Exact: bidirectional BFS over reversals of contiguous segments (n ≤ bound).
/// Breakpoint bound: [ceil(b/2), greedy sorting length].
ReversalDistance reversal_distance(const Perm& a, const Perm& b, ReversalMode mode = ReversalMode::exact,
                                   std::size_t exact_bound = kDefaultReversalBound);

Dist exact_reversal_distance(const Perm& a, const Perm& b, std::size_t exact_bound = kDefaultReversalBound);

/// Reversal distance between tours: min of the exact distance over rotations
/// (and optionally reflections) of both a and b.
Dist circular_reversal_distance(const Perm& a, const Perm& b, bool with_reflection = false,
                                std::size_t exact_bound = kDefaultReversalBound);

/// Rotation of p2 with fewest breakpoints against p1; ties by Hamming distance,
/// then smallest shift. With reflection, reflected rotations are considered
/// after the plain ones.
Perm circ_normalize(const Perm& p1, const Perm& p2, bool with_reflection = false);

/// Normalize p2 by rotation, then walk a sorting-by-reversals trajectory from
/// p1 towards it and stop after a uniformly drawn number of steps. Exact mode
/// steps along shortest paths (uniform among distance-reducing reversals);
/// breakpoint mode follows greedy breakpoint-reducing reversals.
Perm reversal_crossover(const Perm& p1, const Perm& p2, Rng& rng, ReversalMode mode = ReversalMode::exact,
                        std::size_t exact_bound = kDefaultReversalBound);

/// Same walk without the rotation step: the genotypic sorting crossover.
Perm sorting_crossover(const Perm& p1, const Perm& p2, Rng& rng, ReversalMode mode = ReversalMode::exact,
                       std::size_t exact_bound = kDefaultReversalBound);

/// Tours: permutations equal up to rotation (and reflection when enabled).
/// class_members lists shifts 0..n-1, then reflected shifts.
EquivRelation<Perm> rotation_relation(bool with_reflection = false);

struct ExactReversalDistance {
    std::size_t bound = kDefaultReversalBound;
    Dist operator()(const Perm& a, const Perm& b) const { return exact_reversal_distance(a, b, bound); }
};

struct CircularReversalDistance {
    bool with_reflection = false;
    std::size_t bound = kDefaultReversalBound;
    Dist operator()(const Perm& a, const Perm& b) const {
        return circular_reversal_distance(a, b, with_reflection, bound);
    }
};

/// All n! permutations in lexicographic order.
std::vector<Perm> enumerate_perms(std::size_t n);

/// Euclidean TSP instance; edge lengths are rounded to the nearest integer.
struct TspInstance {
    std::vector<std::pair<double, double>> cities;

    std::size_t size() const noexcept { return cities.size(); }
    std::int64_t edge_length(std::size_t i, std::size_t j) const;
    std::int64_t tour_length(const Perm& tour) const;
};

/// First line n, then n lines "x y".
TspInstance parse_tsp(std::istream& in, const std::string& source = "<stream>");
TspInstance load_tsp(const std::filesystem::path& path);

}  // namespace qgx
