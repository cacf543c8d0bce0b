#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "qgx/errors.hpp"
#include "qgx/graph.hpp"
#include "qgx/quotient.hpp"
#include "oracles.hpp"

using namespace qgx;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

AdjMatrix graph(std::size_t n, Edges e) { return AdjMatrix::from_edges(n, e); }

AdjMatrix path3() { return graph(3, {{0, 1}, {1, 2}}); }
AdjMatrix triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST(AdjMatrix, Validation) {
    EXPECT_THROW(AdjMatrix(2, {0, 1, 0, 0}), InvalidRepresentation);  // asymmetric
    EXPECT_THROW(AdjMatrix(2, {1, 0, 0, 0}), InvalidRepresentation);  // self loop
    EXPECT_THROW(AdjMatrix(2, {0, 2, 2, 0}), InvalidRepresentation);  // not 0/1
    EXPECT_THROW(AdjMatrix(2, {0, 1, 1}), DimensionMismatch);
    EXPECT_NO_THROW(AdjMatrix(2, {0, 1, 1, 0}));
}

TEST(AdjMatrix, EdgeEditing) {
    AdjMatrix a(4);
    a.set_edge(0, 3, true);
    EXPECT_TRUE(a.edge(3, 0));
    a.flip_edge(3, 0);
    EXPECT_FALSE(a.edge(0, 3));
    EXPECT_THROW(a.set_edge(1, 1, true), InvalidRepresentation);
    EXPECT_EQ(triangle().edge_count(), 3u);
    EXPECT_EQ(path3().degree(1), 2u);
}

TEST(Relabel, Examples) {
    EXPECT_EQ(relabel(triangle(), NodePermutation::identity(3)), triangle());
    const auto p = relabel(path3(), NodePermutation({2, 1, 0}));
    EXPECT_EQ(p, path3());  // 2-1-0 has the same edge set
    EXPECT_EQ(relabel(triangle(), NodePermutation({1, 2, 0})), triangle());
    const auto moved = relabel(path3(), NodePermutation({1, 0, 2}));
    EXPECT_TRUE(moved.edge(1, 0));
    EXPECT_TRUE(moved.edge(0, 2));
    EXPECT_FALSE(moved.edge(1, 2));
}

TEST(Relabel, SizeMismatch) { EXPECT_THROW(relabel(path3(), NodePermutation::identity(4)), DimensionMismatch); }

TEST(GraphLi, Examples) {
    EXPECT_EQ(graph_li_distance(triangle(), triangle()), 0);
    EXPECT_EQ(graph_li_distance(path3(), graph(3, {{0, 2}, {2, 1}})), 0);
    // Frozen from the permutation oracle: one edge differs, two cells.
    EXPECT_EQ(oracle::graph_li_distance(path3(), triangle()), 2);
    EXPECT_EQ(graph_li_distance(path3(), triangle()), 2);
    EXPECT_EQ(edge_edit_distance(path3(), triangle()), 1);
}

TEST(GraphLi, Errors) {
    EXPECT_THROW(graph_li_distance(path3(), AdjMatrix(4)), DimensionMismatch);
    EXPECT_THROW(graph_li_distance(AdjMatrix(9), AdjMatrix(9)), CapacityError);
    EXPECT_NO_THROW(graph_li_distance(AdjMatrix(9), AdjMatrix(9), MatchOptions{.mode = MatchMode::heuristic}));
}

TEST(GraphLi, ExactMatchesPermutationOracle) {
    Rng rng(31);
    for (std::size_t n = 1; n <= 7; ++n)
        for (int t = 0; t < (n <= 6 ? 60 : 10); ++t) {
            const double p = 0.2 + 0.15 * static_cast<double>(t % 5);
            const auto a = AdjMatrix::random(n, p, rng), b = AdjMatrix::random(n, p, rng);
            ASSERT_EQ(graph_li_distance(a, b), oracle::graph_li_distance(a, b)) << "n=" << n;
        }
}

TEST(GraphLi, ExactMatchReturnsWitness) {
    Rng rng(32);
    for (int t = 0; t < 100; ++t) {
        const auto a = AdjMatrix::random(6, 0.5, rng), b = AdjMatrix::random(6, 0.5, rng);
        const auto m = graph_match(a, b);
        EXPECT_EQ(hamming(a, relabel(b, m.perm)), m.distance);
        EXPECT_EQ(hamming(a, graph_match_normalize(a, b)), m.distance);
    }
}

TEST(GraphLi, HeuristicIsAnUpperBound) {
    Rng rng(33);
    Dist gap = 0;
    for (int t = 0; t < 100; ++t) {
        const auto a = AdjMatrix::random(6, 0.5, rng), b = AdjMatrix::random(6, 0.5, rng);
        const Dist ex = graph_li_distance(a, b);
        const auto hm = graph_match(a, b, MatchOptions{.mode = MatchMode::heuristic});
        EXPECT_GE(hm.distance, ex);
        EXPECT_EQ(hamming(a, relabel(b, hm.perm)), hm.distance);
        gap += hm.distance - ex;
    }
    RecordProperty("heuristic_gap_cells_over_100_pairs", static_cast<int>(gap));
}

TEST(GraphLi, HeuristicIsDeterministic) {
    Rng rng(34);
    const auto a = AdjMatrix::random(12, 0.4, rng), b = AdjMatrix::random(12, 0.4, rng);
    const MatchOptions opt{.mode = MatchMode::heuristic, .restarts = 4, .seed = 9};
    EXPECT_EQ(graph_match(a, b, opt).perm, graph_match(a, b, opt).perm);
}

TEST(GraphLi, RelabelingInvariant) {
    Rng rng(35);
    for (int t = 0; t < 60; ++t) {
        const auto a = AdjMatrix::random(6, 0.5, rng), b = AdjMatrix::random(6, 0.5, rng);
        std::vector<std::size_t> p(6), q(6);
        std::iota(p.begin(), p.end(), 0);
        std::iota(q.begin(), q.end(), 0);
        rng.shuffle(std::span<std::size_t>(p));
        rng.shuffle(std::span<std::size_t>(q));
        EXPECT_EQ(graph_li_distance(relabel(a, NodePermutation(p)), relabel(b, NodePermutation(q))),
                  graph_li_distance(a, b));
    }
}

TEST(GraphLi, AxiomsExhaustiveUpToFourNodes) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto pts = enumerate_graphs(n);
        auto same = [](const AdjMatrix& a, const AdjMatrix& b) { return oracle::graph_li_distance(a, b) == 0; };
        EXPECT_TRUE(check_metric_axioms<AdjMatrix>(pts, GraphLiDistance{}, same).ok()) << "n=" << n;
    }
}

TEST(GraphNormalize, IsomorphicAndIdenticalParents) {
    const auto a = path3();
    EXPECT_EQ(graph_match_normalize(a, a), a);
    const auto b = graph(3, {{0, 2}, {1, 2}});
    EXPECT_EQ(hamming(a, graph_match_normalize(a, b)), 0);
}

TEST(GraphCrossover, IdenticalAndIsomorphicParents) {
    Rng rng(36);
    const auto a = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const auto b = relabel(a, NodePermutation({4, 2, 0, 1, 3}));
    for (int t = 0; t < 20; ++t) {
        EXPECT_EQ(graph_li_crossover(a, a, rng), a);
        const auto c = graph_li_crossover(a, b, rng);
        EXPECT_EQ(graph_li_distance(c, a), 0);
        EXPECT_EQ(graph_li_distance(c, b), 0);
    }
}

TEST(GraphCrossover, ExactModeGeometricUnderLi) {
    Rng rng(37);
    std::vector<std::pair<AdjMatrix, AdjMatrix>> pairs;
    for (int t = 0; t < 200; ++t) pairs.emplace_back(AdjMatrix::random(5, 0.5, rng), AdjMatrix::random(5, 0.5, rng));
    auto op = [](const AdjMatrix& a, const AdjMatrix& b, Rng& g) { return graph_li_crossover(a, b, g); };
    auto brute = [](const AdjMatrix& a, const AdjMatrix& b) { return oracle::graph_li_distance(a, b); };
    EXPECT_EQ(check_geometricity(op, brute, pairs, 2, 4).violations, 0u);
}

TEST(GraphCrossover, HeuristicModeMeasured) {
    Rng rng(38);
    std::vector<std::pair<AdjMatrix, AdjMatrix>> pairs;
    for (int t = 0; t < 100; ++t) pairs.emplace_back(AdjMatrix::random(6, 0.5, rng), AdjMatrix::random(6, 0.5, rng));
    auto op = [](const AdjMatrix& a, const AdjMatrix& b, Rng& g) {
        return graph_li_crossover(a, b, g, MatchOptions{.mode = MatchMode::heuristic});
    };
    const auto rep = check_geometricity(op, GraphLiDistance{}, pairs, 2, 4);
    RecordProperty("heuristic_violation_rate_x1000", static_cast<int>(rep.violation_rate() * 1000));
    for (const auto& [a, b] : pairs) {
        Rng g(1);
        EXPECT_TRUE(op(a, b, g).is_valid());
    }
}

TEST(GraphCrossover, UniformKeepsSymmetry) {
    Rng rng(39);
    for (int t = 0; t < 50; ++t) {
        const auto c = graph_uniform_crossover(AdjMatrix::random(7, 0.5, rng), AdjMatrix::random(7, 0.5, rng), rng);
        EXPECT_TRUE(c.is_valid());
    }
}

TEST(Census, UnlabeledGraphs) {
    EXPECT_EQ(oracle::graph_census(3), 4u);
    EXPECT_EQ(oracle::graph_census(4), 11u);
    EXPECT_EQ(unlabeled_graph_census(1), 1u);
    EXPECT_EQ(unlabeled_graph_census(2), 2u);
    EXPECT_EQ(unlabeled_graph_census(3), 4u);
    EXPECT_EQ(unlabeled_graph_census(4), 11u);
    EXPECT_EQ(unlabeled_graph_census(5), oracle::graph_census(5));
    EXPECT_EQ(enumerate_graphs(3).size(), 8u);  // 8 labeled graphs, not 6 * 4
}

TEST(GraphCode, RoundTrip) {
    Rng rng(40);
    for (int t = 0; t < 50; ++t) {
        const auto a = AdjMatrix::random(7, 0.5, rng);
        EXPECT_EQ(graph_from_code(7, graph_code(a)), a);
    }
}

TEST(PlantedPartition, DeterministicAndDenseInside) {
    const auto g1 = planted_partition_graph(32, 4, 0.7, 0.1, 5);
    EXPECT_EQ(g1, planted_partition_graph(32, 4, 0.7, 0.1, 5));
    std::size_t inside = 0, across = 0;
    for (const auto& [i, j] : g1.edges()) (i * 4 / 32 == j * 4 / 32 ? inside : across)++;
    EXPECT_GT(inside, across);
    EXPECT_EQ(planted_partition_graph(10, 2, 1.0, 0.0, 1).edge_count(), 20u);
}

TEST(EdgeList, RoundTrip) {
    const auto g = planted_partition_graph(12, 3, 0.6, 0.2, 2);
    std::stringstream s;
    write_edge_list(s, g);
    EXPECT_EQ(parse_edge_list(s), g);
}

TEST(EdgeList, RejectsMalformedInput) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in, "t");
    };
    EXPECT_NO_THROW(parse("3 2\n0 1\n1 2\n"));
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("3 2\n0 1\n"), ParseError);         // missing edge
    EXPECT_THROW(parse("3 1\n0 3\n"), ParseError);         // out of range
    EXPECT_THROW(parse("3 1\n1 1\n"), ParseError);         // self loop
    EXPECT_THROW(parse("3 2\n0 1\n1 0\n"), ParseError);    // repeated edge
    EXPECT_THROW(parse("3 1\n0 1\n2 0\n"), ParseError);    // trailing content
    EXPECT_THROW(parse("3 1\n0 x\n"), ParseError);
    try {
        parse("3 1\n0 5\n");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}
