#pragma once

// Quotient construction over a genotype space: an equivalence relation with
// finitely enumerable classes, the induced distance
//     d~(x̄, ȳ) = min over x' ∈ x̄, y' ∈ ȳ of d(x', y'),
// and normalization of one parent towards another.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

namespace qgx {

template <typename P>
struct EquivRelation {
    std::function<bool(const P&, const P&)> same_class;
    /// All members of the class of x, in the relation's canonical enumeration
    /// order. Must contain x itself.
    std::function<std::vector<P>(const P&)> class_members;
};

/// Singleton classes; the quotient is the original space.
template <typename P>
EquivRelation<P> identity_relation() {
    return {[](const P& a, const P& b) { return a == b; },
            [](const P& a) { return std::vector<P>{a}; }};
}

inline constexpr std::size_t kDefaultQuotientBound = 1'000'000;

enum class QuotientSides {
    /// Minimize over representatives of both classes (the definition).
    both,
    /// Fix x and minimize over ȳ only. Equal to `both` whenever the relation
    /// comes from a group acting by isometries of the base distance.
    one,
};

/// Reference oracle for every specialized quotient distance: plain
/// enumeration of class representatives.
template <typename P, DistanceFor<P> D>
Dist quotient_distance_bruteforce(const P& x, const P& y, const D& base, const EquivRelation<P>& rel,
                                  QuotientSides sides = QuotientSides::both,
                                  std::size_t bound = kDefaultQuotientBound) {
    const std::vector<P> ys = rel.class_members(y);
    std::vector<P> xs;
    if (sides == QuotientSides::both) {
        xs = rel.class_members(x);
    } else {
        xs.push_back(x);
    }
    const std::size_t work = xs.size() * ys.size();
    if (work > bound) throw CapacityError("quotient_distance_bruteforce: representative pairs", work, bound);

    Dist best = -1;
    for (const auto& a : xs) {
        for (const auto& b : ys) {
            const Dist v = base(a, b);
            if (best < 0 || v < best) best = v;
            if (best == 0) return 0;
        }
    }
    return best;
}

/// Callable quotient distance backed by the brute-force oracle.
template <typename P, typename D>
struct BruteForceQuotientDistance {
    D base;
    EquivRelation<P> rel;
    QuotientSides sides = QuotientSides::both;
    std::size_t bound = kDefaultQuotientBound;

    Dist operator()(const P& x, const P& y) const {
        return quotient_distance_bruteforce(x, y, base, rel, sides, bound);
    }
};

/// z lies in the quotient segment between the classes of x and y. `qd` is any
/// distance on classes evaluated through representatives: the brute-force
/// oracle above or an exact specialized routine.
template <typename P, DistanceFor<P> QD>
bool quotient_segment_contains(const P& x, const P& y, const P& z, const QD& qd) {
    return segment_contains(x, y, z, qd);
}

/// Generic normalization: the member of p2's class closest to p1 under the
/// base distance. Ties go to the first member in canonical enumeration order.
template <typename P, DistanceFor<P> D>
P normalize(const P& p1, const P& p2, const D& base, const EquivRelation<P>& rel,
            std::size_t bound = kDefaultQuotientBound) {
    std::vector<P> members = rel.class_members(p2);
    if (members.size() > bound) throw CapacityError("normalize: class size", members.size(), bound);
    std::size_t best_i = 0;
    Dist best = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Dist v = base(p1, members[i]);
        if (best < 0 || v < best) {
            best = v;
            best_i = i;
            if (v == 0) break;
        }
    }
    return std::move(members[best_i]);
}

}  // namespace qgx
