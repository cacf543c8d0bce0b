#pragma once

// Representation-independent metric machinery: distances, segment membership,
// and empirical checks of the metric axioms and of crossover geometricity.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <ranges>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/rng.hpp"

namespace qgx {

/// Every in-scope distance is integer-valued; segment tests use exact equality.
using Dist = std::int64_t;

template <typename D, typename P>
concept DistanceFor = requires(const D& d, const P& x, const P& y) {
    { d(x, y) } -> std::convertible_to<Dist>;
};

template <typename Op, typename P>
concept CrossoverFor = requires(const Op& op, const P& x, const P& y, Rng& rng) {
    { op(x, y, rng) } -> std::convertible_to<P>;
};

/// Hamming distance between equal-length ranges.
struct Hamming {
    template <typename R>
    Dist operator()(const R& a, const R& b) const {
        const auto na = static_cast<std::size_t>(std::ranges::size(a));
        const auto nb = static_cast<std::size_t>(std::ranges::size(b));
        if (na != nb) throw DimensionMismatch("hamming: length mismatch", na, nb);
        Dist h = 0;
        auto ib = std::ranges::begin(b);
        for (const auto& v : a) {
            if (!(v == *ib)) ++h;
            ++ib;
        }
        return h;
    }
};

/// z ∈ [x;y]_d, i.e. d(x,z) + d(z,y) == d(x,y).
template <typename P, DistanceFor<P> D>
bool segment_contains(const P& x, const P& y, const P& z, const D& d) {
    return static_cast<Dist>(d(x, z)) + static_cast<Dist>(d(z, y)) == static_cast<Dist>(d(x, y));
}

// ---------------------------------------------------------------------------
// Metric axioms

enum class Axiom { non_negativity, identity, symmetry, triangle };

struct AxiomViolation {
    Axiom axiom;
    // Indices into the sample. identity/symmetry/non_negativity use (i, j);
    // triangle reports d(i,k) > d(i,j) + d(j,k).
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
};

struct AxiomReport {
    std::size_t points = 0;
    bool exhaustive = true;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept { return violations.empty(); }

    std::size_t count(Axiom a) const noexcept {
        std::size_t c = 0;
        for (const auto& v : violations) c += v.axiom == a ? 1 : 0;
        return c;
    }
};

struct AxiomOptions {
    /// Samples up to this size are checked on every pair and every ordered
    /// triple; larger samples fall back to random triples.
    std::size_t exhaustive_limit = 512;
    std::size_t sampled_triples = 200'000;
    std::uint64_t seed = 0;
    /// Pseudo-metrics only need d(x,x) = 0, not d(x,y) = 0 ⇒ x ~ y.
    bool pseudo = false;
};

/// Checks non-negativity, identity (d(x,y) = 0 ⇔ same(x,y)), symmetry and the
/// triangle inequality on a sample. `same` defaults to equality; quotient
/// distances pass their class predicate instead.
template <typename P, DistanceFor<P> D, typename Same = std::equal_to<>>
AxiomReport check_metric_axioms(std::span<const P> points, const D& d, const Same& same = {},
                                const AxiomOptions& opt = {}) {
    AxiomReport rep;
    const std::size_t n = points.size();
    rep.points = n;
    if (n == 0) return rep;

    auto check_pair = [&](std::size_t i, std::size_t j, Dist dij, Dist dji) {
        if (dij < 0) rep.violations.push_back({Axiom::non_negativity, i, j, 0});
        const bool zero = dij == 0;
        const bool eq = i == j || static_cast<bool>(same(points[i], points[j]));
        if (opt.pseudo ? (eq && !zero) : (zero != eq))
            rep.violations.push_back({Axiom::identity, i, j, 0});
        if (i != j && dij != dji) rep.violations.push_back({Axiom::symmetry, i, j, 0});
    };

    if (n <= opt.exhaustive_limit) {
        std::vector<Dist> m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = d(points[i], points[j]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                check_pair(i, j, m[i * n + j], m[j * n + i]);
                ++rep.pairs_checked;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (m[i * n + k] > m[i * n + j] + m[j * n + k])
                        rep.violations.push_back({Axiom::triangle, i, j, k});
                }
        rep.triples_checked = n * n * n;
        return rep;
    }

    rep.exhaustive = false;
    Rng rng(opt.seed);
    for (std::size_t t = 0; t < opt.sampled_triples; ++t) {
        const auto i = static_cast<std::size_t>(rng.below(n));
        const auto j = static_cast<std::size_t>(rng.below(n));
        const auto k = static_cast<std::size_t>(rng.below(n));
        const Dist dij = d(points[i], points[j]);
        const Dist djk = d(points[j], points[k]);
        const Dist dik = d(points[i], points[k]);
        check_pair(i, j, dij, d(points[j], points[i]));
        rep.pairs_checked += 1;
        if (dik > dij + djk) rep.violations.push_back({Axiom::triangle, i, j, k});
        ++rep.triples_checked;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Geometricity

struct GeometricityViolation {
    std::size_t pair_index = 0;
    std::size_t trial = 0;
    Dist d_xz = 0;
    Dist d_zy = 0;
    Dist d_xy = 0;
};

struct GeometricityReport {
    std::size_t pairs = 0;
    std::size_t trials_per_pair = 0;
    std::size_t total = 0;
    std::size_t violations = 0;
    /// First few offending offspring, for diagnostics.
    std::vector<GeometricityViolation> examples;

    double violation_rate() const noexcept {
        return total == 0 ? 0.0 : static_cast<double>(violations) / static_cast<double>(total);
    }
};

inline constexpr std::size_t kMaxReportedViolations = 32;

/// Runs `op` trials_per_pair times on every parent pair, each trial on its own
/// stream Rng(seed, pair * trials_per_pair + trial), and counts offspring that
/// fall outside the d-segment between the parents.
template <typename P, CrossoverFor<P> Op, DistanceFor<P> D>
GeometricityReport check_geometricity(const Op& op, const D& d,
                                      std::span<const std::pair<P, P>> pairs,
                                      std::size_t trials_per_pair, std::uint64_t seed) {
    if (trials_per_pair < 1) throw std::invalid_argument("check_geometricity: trials_per_pair must be >= 1");
    GeometricityReport rep;
    rep.pairs = pairs.size();
    rep.trials_per_pair = trials_per_pair;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [x, y] = pairs[p];
        const Dist dxy = d(x, y);
        for (std::size_t t = 0; t < trials_per_pair; ++t) {
            Rng rng(seed, p * trials_per_pair + t);
            const P z = op(x, y, rng);
            const Dist dxz = d(x, z);
            const Dist dzy = d(z, y);
            ++rep.total;
            if (dxz + dzy != dxy) {
                ++rep.violations;
                if (rep.examples.size() < kMaxReportedViolations)
                    rep.examples.push_back({p, t, dxz, dzy, dxy});
            }
        }
    }
    return rep;
}

template <typename P, CrossoverFor<P> Op, DistanceFor<P> D>
GeometricityReport check_geometricity(const Op& op, const D& d, const std::vector<std::pair<P, P>>& pairs,
                                      std::size_t trials_per_pair, std::uint64_t seed) {
    return check_geometricity<P>(op, d, std::span<const std::pair<P, P>>(pairs), trials_per_pair, seed);
}

}  // namespace qgx
