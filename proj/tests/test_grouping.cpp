#include <gtest/gtest.h>

#include "qgx/errors.hpp"
#include "qgx/grouping.hpp"
#include "qgx/quotient.hpp"
#include "oracles.hpp"

using namespace qgx;

namespace {

KaryVector kv(std::size_t k, std::vector<int> l) { return KaryVector(k, std::move(l)); }

}  // namespace

TEST(KaryVector, Validation) {
    EXPECT_THROW(kv(2, {1, 3}), InvalidRepresentation);
    EXPECT_THROW(kv(2, {0, 1}), InvalidRepresentation);
    EXPECT_THROW(kv(2, {}), InvalidRepresentation);
    EXPECT_THROW(kv(0, {1}), InvalidRepresentation);
    EXPECT_NO_THROW(kv(3, {1, 1, 1}));
}

TEST(KaryVector, RandomIsValid) {
    Rng rng(1);
    for (int t = 0; t < 100; ++t) EXPECT_TRUE(KaryVector::random(10, 4, rng).is_valid());
}

TEST(LabelPermutation, Validation) {
    EXPECT_THROW(LabelPermutation({1, 1}), InvalidRepresentation);
    EXPECT_THROW(LabelPermutation({1, 3}), InvalidRepresentation);
    EXPECT_EQ(LabelPermutation::identity(3)(2), 2);
}

TEST(Relabel, AppliesSigma) {
    EXPECT_EQ(relabel(kv(3, {1, 2, 3, 1}), LabelPermutation({2, 3, 1})), kv(3, {2, 3, 1, 2}));
}

TEST(CanonicalLabels, FirstOccurrenceOrder) {
    EXPECT_EQ(canonical_labels(kv(3, {3, 3, 1, 2})), kv(3, {1, 1, 2, 3}));
    EXPECT_EQ(canonical_labels(kv(2, {2, 2, 1, 1})), canonical_labels(kv(2, {1, 1, 2, 2})));
}

TEST(AgreementMatrix, Counts) {
    const auto c = agreement_matrix(kv(2, {1, 1, 2}), kv(2, {2, 1, 1}));
    EXPECT_EQ(c, (std::vector<std::int64_t>{1, 1, 1, 0}));
}

TEST(LiDistance, Examples) {
    EXPECT_EQ(li_distance(kv(3, {1, 2, 3, 1}), kv(3, {1, 2, 3, 1})), 0);
    EXPECT_EQ(li_distance(kv(3, {1, 1, 2, 2, 3}), kv(3, {3, 3, 1, 1, 2})), 0);
    EXPECT_EQ(li_distance(kv(2, {1, 1, 2}), kv(2, {1, 2, 2})), 1);
}

TEST(LiDistance, DimensionMismatch) {
    EXPECT_THROW(li_distance(kv(2, {1, 2}), kv(2, {1, 2, 1})), DimensionMismatch);
    EXPECT_THROW(li_distance(kv(2, {1, 2}), kv(3, {1, 2})), DimensionMismatch);
}

TEST(LiDistance, MatchesPermutationBruteForce) {
    Rng rng(2);
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t n = 1; n <= 9; ++n)
            for (int t = 0; t < 60; ++t) {
                const auto a = KaryVector::random(n, k, rng), b = KaryVector::random(n, k, rng);
                ASSERT_EQ(li_distance(a, b), oracle::li_distance(a, b)) << "k=" << k << " n=" << n;
            }
}

TEST(LiDistance, TwoSidedEqualsOneSided) {
    const auto rel = relabeling_relation();
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto pts = enumerate_kary(n, k);
            for (const auto& a : pts)
                for (const auto& b : pts)
                    ASSERT_EQ(quotient_distance_bruteforce(a, b, KaryHamming{}, rel, QuotientSides::both),
                              quotient_distance_bruteforce(a, b, KaryHamming{}, rel, QuotientSides::one));
        }
}

TEST(LiDistance, InvariantUnderRelabelingOfEitherSide) {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto a = KaryVector::random(8, 4, rng), b = KaryVector::random(8, 4, rng);
        std::vector<int> img{1, 2, 3, 4};
        rng.shuffle(std::span<int>(img));
        const LabelPermutation s(img);
        EXPECT_EQ(li_distance(relabel(a, s), b), li_distance(a, b));
        EXPECT_EQ(li_distance(a, relabel(b, s)), li_distance(a, b));
    }
}

TEST(LiNormalize, Examples) {
    EXPECT_EQ(li_normalize(kv(2, {1, 1, 2, 2}), kv(2, {2, 2, 1, 1})), kv(2, {1, 1, 2, 2}));
    EXPECT_EQ(li_normalize(kv(3, {1, 2, 3}), kv(3, {3, 1, 2})), kv(3, {1, 2, 3}));
    const auto p = kv(3, {2, 1, 3, 3});
    EXPECT_EQ(li_normalize(p, p), p);
}

TEST(LiNormalize, AbsentLabelsStayFixed) {
    // Label 4 appears in neither parent.
    const auto a = kv(4, {2, 2, 1}), b = kv(4, {1, 1, 3});
    EXPECT_EQ(optimal_relabeling(a, b).image()[3], 4);
    EXPECT_EQ(li_normalize(a, b), kv(4, {2, 2, 1}));
}

TEST(LiNormalize, LexicographicallySmallestSigmaOnTies) {
    // a uses only label 1; every sigma with sigma(1)=1 is optimal.
    const auto a = kv(3, {1, 1, 1}), b = kv(3, {1, 2, 3});
    const auto sigma = optimal_relabeling(a, b);
    EXPECT_EQ(std::vector<int>(sigma.image().begin(), sigma.image().end()), (std::vector<int>{1, 2, 3}));
}

TEST(LiNormalize, ReachesLiDistanceAndStaysInClass) {
    Rng rng(4);
    for (int t = 0; t < 500; ++t) {
        const auto a = KaryVector::random(9, 4, rng), b = KaryVector::random(9, 4, rng);
        const auto nb = li_normalize(a, b);
        EXPECT_EQ(hamming(a, nb), li_distance(a, b));
        EXPECT_EQ(canonical_labels(nb), canonical_labels(b));
    }
}

TEST(LiCrossover, IdenticalParents) {
    Rng rng(5);
    const auto p = kv(3, {1, 2, 3, 2});
    for (int t = 0; t < 20; ++t) EXPECT_EQ(li_crossover(p, p, rng), p);
}

TEST(LiCrossover, RelabeledTwinGivesFirstParent) {
    Rng rng(6);
    for (int t = 0; t < 50; ++t) EXPECT_EQ(li_crossover(kv(2, {1, 1, 2, 2}), kv(2, {2, 2, 1, 1}), rng), kv(2, {1, 1, 2, 2}));
}

TEST(LiCrossover, GeometricUnderLi) {
    Rng rng(7);
    std::vector<std::pair<KaryVector, KaryVector>> pairs;
    for (int t = 0; t < 1000; ++t) pairs.emplace_back(KaryVector::random(8, 3, rng), KaryVector::random(8, 3, rng));
    auto op = [](const KaryVector& a, const KaryVector& b, Rng& g) { return li_crossover(a, b, g); };
    auto brute = [](const KaryVector& a, const KaryVector& b) { return oracle::li_distance(a, b); };
    EXPECT_EQ(check_geometricity(op, brute, pairs, 1, 3).violations, 0u);
    auto op1 = [](const KaryVector& a, const KaryVector& b, Rng& g) {
        return li_crossover(a, b, g, VectorCrossover::one_point);
    };
    EXPECT_EQ(check_geometricity(op1, brute, pairs, 1, 3).violations, 0u);
}

TEST(LiCrossover, PlainUniformIsNotGeometricUnderLi) {
    Rng rng(8);
    std::vector<std::pair<KaryVector, KaryVector>> pairs;
    for (int t = 0; t < 500; ++t) pairs.emplace_back(KaryVector::random(8, 3, rng), KaryVector::random(8, 3, rng));
    auto op = [](const KaryVector& a, const KaryVector& b, Rng& g) { return uniform_crossover(a, b, g); };
    EXPECT_GT(check_geometricity(op, LiDistance{}, pairs, 1, 3).violations, 0u);
}

TEST(OnePointCrossover, TakesPrefixAndSuffix) {
    Rng rng(9);
    const auto a = kv(2, {1, 1, 1, 1, 1}), b = kv(2, {2, 2, 2, 2, 2});
    for (int t = 0; t < 50; ++t) {
        const auto c = one_point_crossover(a, b, rng);
        std::size_t switches = 0;
        for (std::size_t i = 1; i < c.size(); ++i) switches += c[i] != c[i - 1];
        EXPECT_LE(switches, 1u);
        EXPECT_TRUE(switches == 0 || c[0] == 1);
    }
}

TEST(LiAxioms, ExhaustiveSmallSpaces) {
    auto same = [](const KaryVector& a, const KaryVector& b) { return canonical_labels(a) == canonical_labels(b); };
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto pts = enumerate_kary(n, k);
            EXPECT_TRUE(check_metric_axioms<KaryVector>(pts, LiDistance{}, same).ok()) << k << "," << n;
        }
}

TEST(EnumerateKary, Sizes) {
    EXPECT_EQ(enumerate_kary(3, 2).size(), 8u);
    EXPECT_EQ(enumerate_kary(2, 3).size(), 9u);
}
