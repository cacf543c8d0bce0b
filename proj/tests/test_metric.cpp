#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

using namespace qgx;

namespace {

std::vector<std::string> all_strings(std::size_t n, const std::string& alphabet = "01") {
    std::vector<std::string> out{""};
    for (std::size_t len = 0; len < n; ++len) {
        std::vector<std::string> next;
        for (const auto& s : out)
            for (char c : alphabet) next.push_back(s + c);
        out = std::move(next);
    }
    return out;
}

std::string uniform(const std::string& a, const std::string& b, Rng& rng) {
    std::string c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = rng.coin() ? a[i] : b[i];
    return c;
}

}  // namespace

TEST(Hamming, CountsMismatches) {
    EXPECT_EQ(Hamming{}(std::string("0000"), std::string("1111")), 4);
    EXPECT_EQ(Hamming{}(std::string("0101"), std::string("0101")), 0);
    EXPECT_EQ(Hamming{}(std::vector<int>{1, 2, 3}, std::vector<int>{1, 3, 3}), 1);
}

TEST(Hamming, LengthMismatchThrows) {
    EXPECT_THROW(Hamming{}(std::string("01"), std::string("011")), DimensionMismatch);
}

TEST(Segment, Examples) {
    const Hamming h;
    EXPECT_TRUE(segment_contains(std::string("0000"), std::string("1111"), std::string("0011"), h));
    EXPECT_FALSE(segment_contains(std::string("0000"), std::string("0011"), std::string("1100"), h));
    EXPECT_TRUE(segment_contains(std::string("0110"), std::string("0110"), std::string("0110"), h));
}

TEST(Segment, EndpointsAndSymmetry) {
    const auto pts = all_strings(3);
    for (const auto& x : pts)
        for (const auto& y : pts) {
            EXPECT_TRUE(segment_contains(x, y, x, Hamming{}));
            EXPECT_TRUE(segment_contains(x, y, y, Hamming{}));
            for (const auto& z : pts)
                EXPECT_EQ(segment_contains(x, y, z, Hamming{}), segment_contains(y, x, z, Hamming{}));
        }
}

TEST(MetricAxioms, HammingOnThreeBitStrings) {
    const auto pts = all_strings(3);
    const auto rep = check_metric_axioms<std::string>(pts, Hamming{});
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_EQ(rep.points, 8u);
    EXPECT_EQ(rep.triples_checked, 512u);
}

TEST(MetricAxioms, AsymmetricDifferenceIsFlagged) {
    const std::vector<int> pts{0, 1, 2, 3};
    auto diff = [](int a, int b) { return static_cast<Dist>(a - b); };
    const auto rep = check_metric_axioms<int>(pts, diff);
    EXPECT_FALSE(rep.ok());
    EXPECT_GT(rep.count(Axiom::symmetry), 0u);
    EXPECT_GT(rep.count(Axiom::non_negativity), 0u);
}

TEST(MetricAxioms, SquaredDifferenceBreaksTriangle) {
    const std::vector<int> pts{0, 1, 2};
    auto sq = [](int a, int b) { return static_cast<Dist>((a - b) * (a - b)); };
    const auto rep = check_metric_axioms<int>(pts, sq);
    ASSERT_EQ(rep.count(Axiom::triangle), 2u);  // 0->1->2 and 2->1->0
    EXPECT_EQ(rep.count(Axiom::symmetry), 0u);
}

TEST(MetricAxioms, IdentityUsesClassPredicate) {
    // Parity distance: zero between strings with the same number of ones mod 2.
    const auto pts = all_strings(3);
    auto parity = [](const std::string& s) { return std::count(s.begin(), s.end(), '1') % 2; };
    auto d = [&](const std::string& a, const std::string& b) { return static_cast<Dist>(parity(a) != parity(b)); };
    EXPECT_FALSE(check_metric_axioms<std::string>(pts, d).ok());
    auto same = [&](const std::string& a, const std::string& b) { return parity(a) == parity(b); };
    EXPECT_TRUE(check_metric_axioms<std::string>(pts, d, same).ok());
    EXPECT_TRUE(check_metric_axioms<std::string>(pts, d, std::equal_to<>{}, AxiomOptions{.pseudo = true}).ok());
}

TEST(MetricAxioms, LargeSampleFallsBackToSampling) {
    const auto pts = all_strings(10);
    const auto rep = check_metric_axioms<std::string>(pts, Hamming{}, std::equal_to<>{},
                                                      AxiomOptions{.sampled_triples = 5000, .seed = 3});
    EXPECT_FALSE(rep.exhaustive);
    EXPECT_EQ(rep.triples_checked, 5000u);
    EXPECT_TRUE(rep.ok());
}

TEST(MetricAxioms, EmptySample) {
    const std::vector<std::string> none;
    const auto rep = check_metric_axioms<std::string>(none, Hamming{});
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.points, 0u);
}

TEST(Geometricity, UniformCrossoverUnderHamming) {
    Rng rng(11);
    std::vector<std::pair<std::string, std::string>> pairs;
    const auto pts = all_strings(6);
    for (int i = 0; i < 100; ++i) pairs.emplace_back(pts[rng.below(64)], pts[rng.below(64)]);
    const auto rep = check_geometricity(uniform, Hamming{}, pairs, 50, 5);
    EXPECT_EQ(rep.total, 5000u);
    EXPECT_EQ(rep.violations, 0u);
    EXPECT_EQ(rep.violation_rate(), 0.0);
}

TEST(Geometricity, ParentIgnoringOperatorIsCaught) {
    auto pseudo = [](const std::string& a, const std::string&, Rng& rng) {
        std::string c = a;
        for (auto& ch : c) ch = rng.coin() ? '1' : '0';
        return c;
    };
    Rng rng(12);
    std::vector<std::pair<std::string, std::string>> pairs;
    const auto pts = all_strings(6);
    for (int i = 0; i < 100; ++i) pairs.emplace_back(pts[rng.below(64)], pts[rng.below(64)]);
    const auto rep = check_geometricity(pseudo, Hamming{}, pairs, 50, 5);
    EXPECT_GT(rep.violation_rate(), 0.05);
    EXPECT_FALSE(rep.examples.empty());
    EXPECT_LE(rep.examples.size(), kMaxReportedViolations);
}

TEST(Geometricity, FirstParentOperatorIsGeometric) {
    auto first = [](const std::string& a, const std::string&, Rng&) { return a; };
    std::vector<std::pair<std::string, std::string>> pairs{{"0000", "1111"}, {"0101", "0011"}};
    EXPECT_EQ(check_geometricity(first, Hamming{}, pairs, 3, 0).violations, 0u);
}

TEST(Geometricity, RejectsZeroTrials) {
    std::vector<std::pair<std::string, std::string>> pairs{{"0", "1"}};
    EXPECT_THROW(check_geometricity(uniform, Hamming{}, pairs, 0, 0), std::invalid_argument);
}

TEST(Geometricity, TrialStreamsAreIndependentOfOrder) {
    std::vector<std::pair<std::string, std::string>> pairs{{"000000", "111111"}, {"010101", "101010"}};
    std::vector<std::string> seen1, seen2;
    auto rec1 = [&](const std::string& a, const std::string& b, Rng& rng) {
        seen1.push_back(uniform(a, b, rng));
        return seen1.back();
    };
    auto rec2 = [&](const std::string& a, const std::string& b, Rng& rng) {
        seen2.push_back(uniform(a, b, rng));
        return seen2.back();
    };
    check_geometricity(rec1, Hamming{}, pairs, 4, 9);
    check_geometricity(rec2, Hamming{}, pairs, 4, 9);
    EXPECT_EQ(seen1, seen2);
}

TEST(Rng, StreamsAreReproducible) {
    Rng a(42, 7), b(42, 7), c(42, 8);
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        EXPECT_EQ(x, b());
        (void)c();
    }
    Rng d(42, 7);
    Rng e(42, 8);
    EXPECT_NE(d(), e());
}

TEST(Rng, BelowIsInRangeAndCoversIt) {
    Rng r(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[r.below(7)];
    for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Rng, ChanceBoundaries) {
    Rng r(2);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_FALSE(r.chance(0.0));
        EXPECT_TRUE(r.chance(1.0));
    }
}

TEST(Rng, BetweenIsInclusive) {
    Rng r(3);
    bool lo = false, hi = false;
    for (int i = 0; i < 1000; ++i) {
        const auto v = r.between(-2, 2);
        ASSERT_GE(v, -2);
        ASSERT_LE(v, 2);
        lo |= v == -2;
        hi |= v == 2;
    }
    EXPECT_TRUE(lo && hi);
}
