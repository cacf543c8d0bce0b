#pragma once

// Grouping genotypes: k-ary vectors whose label names carry no meaning. Two
// vectors are equivalent when one is a relabeling of the other, and the
// quotient distance is the labeling-independent (LI) distance
//     LI(a, b) = min over label permutations σ of H(a, b_σ).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgx/metric.hpp"
#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"

namespace qgx {

/// Fixed-length vector over the labels {1..k}.
class KaryVector {
public:
    KaryVector(std::size_t k, std::vector<int> labels);

    static KaryVector random(std::size_t n, std::size_t k, Rng& rng);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return labels_.size(); }
    int operator[](std::size_t i) const { return labels_[i]; }
    std::span<const int> labels() const noexcept { return labels_; }

    bool is_valid() const noexcept;

    friend bool operator==(const KaryVector&, const KaryVector&) = default;

private:
    std::size_t k_;
    std::vector<int> labels_;
};

/// Bijection on {1..k}; image[j-1] = σ(j).
class LabelPermutation {
public:
    explicit LabelPermutation(std::vector<int> image);
    static LabelPermutation identity(std::size_t k);

    std::size_t k() const noexcept { return image_.size(); }
    int operator()(int label) const { return image_[static_cast<std::size_t>(label - 1)]; }
    std::span<const int> image() const noexcept { return image_; }

    friend bool operator==(const LabelPermutation&, const LabelPermutation&) = default;

private:
    std::vector<int> image_;
};

/// a_σ: every entry a_i replaced by σ(a_i).
KaryVector relabel(const KaryVector& a, const LabelPermutation& sigma);

/// Relabels in order of first occurrence (first label seen becomes 1, ...).
/// Two vectors are equivalent iff their canonical forms coincide.
KaryVector canonical_labels(const KaryVector& a);

Dist hamming(const KaryVector& a, const KaryVector& b);

/// C[i][j] = #{t : a_t = i+1 and b_t = j+1}, k×k row-major.
std::vector<std::int64_t> agreement_matrix(const KaryVector& a, const KaryVector& b);

/// Permutation σ maximizing agreement between a and b_σ (assignment problem on
/// the agreement matrix). Labels absent from both vectors stay fixed; among
/// co-optimal σ the lexicographically smallest image is chosen.
LabelPermutation optimal_relabeling(const KaryVector& a, const KaryVector& b);

/// Labeling-independent distance, O(k³ + n).
Dist li_distance(const KaryVector& a, const KaryVector& b);

/// p2 relabeled to be as close as possible to p1 under Hamming distance.
KaryVector li_normalize(const KaryVector& p1, const KaryVector& p2);

enum class VectorCrossover { uniform, one_point };

KaryVector uniform_crossover(const KaryVector& a, const KaryVector& b, Rng& rng);
KaryVector one_point_crossover(const KaryVector& a, const KaryVector& b, Rng& rng);

/// Normalize p2 to p1, then apply the ordinary vector crossover.
KaryVector li_crossover(const KaryVector& p1, const KaryVector& p2, Rng& rng,
                        VectorCrossover base = VectorCrossover::uniform);

/// Relabeling equivalence. class_members enumerates all k! relabelings in
/// lexicographic order of σ's image (duplicates included when some labels are
/// unused).
EquivRelation<KaryVector> relabeling_relation();

struct LiDistance {
    Dist operator()(const KaryVector& a, const KaryVector& b) const { return li_distance(a, b); }
};

struct KaryHamming {
    Dist operator()(const KaryVector& a, const KaryVector& b) const { return hamming(a, b); }
};

/// Every vector in {1..k}^n, in lexicographic order. n·log(k) must stay small.
std::vector<KaryVector> enumerate_kary(std::size_t n, std::size_t k);

}  // namespace qgx
