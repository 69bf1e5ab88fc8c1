#include "growthlab/graph.hpp"
#include "support/brute.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace growthlab;

namespace {

Graph three_paths(std::size_t k) { return flipped_paths(k, 3, FlipSpec(k, {})); }

/// Largest t such that some 2t distinct vertices realise H_t on cross pairs.
std::size_t brute_semi_induced(const Graph& g) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::size_t best = 0;
    do {
        for (std::size_t t = best + 1; 2 * t <= g.size(); ++t) {
            bool ok = true;
            for (std::size_t i = 0; i < t && ok; ++i)
                for (std::size_t j = 0; j < t && ok; ++j) ok = g.has_edge(order[i], order[t + j]) == (i <= j);
            if (!ok) break;
            best = t;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

Graph random_graph(std::size_t v, std::mt19937_64& rng) {
    const std::size_t pairs = v * (v - 1) / 2;
    return Graph::from_pair_mask(v, rng() & ((std::uint64_t{1} << pairs) - 1));
}

} // namespace

TEST(HalfGraph, SmallCases) {
    const Graph h1 = half_graph(1);
    EXPECT_EQ(h1.size(), 2u);
    EXPECT_EQ(h1.edge_count(), 1u);

    const Graph h2 = half_graph(2);
    EXPECT_EQ(h2.edge_count(), 3u);
    EXPECT_TRUE(h2.has_edge(0, 2));
    EXPECT_TRUE(h2.has_edge(0, 3));
    EXPECT_TRUE(h2.has_edge(1, 3));
    EXPECT_FALSE(h2.has_edge(1, 2));

    const Graph h3 = half_graph(3);
    EXPECT_EQ(h3.edge_count(), 6u);
    EXPECT_EQ(h3.degree(0), 3u);
    EXPECT_EQ(h3.degree(1), 2u);
    EXPECT_EQ(h3.degree(2), 1u);
    EXPECT_THROW(half_graph(0), std::invalid_argument);
}

TEST(FlippedPaths, EmptySpecGivesThreeColoredPaths) {
    const Graph g = three_paths(4);
    EXPECT_EQ(g.size(), 12u);
    EXPECT_EQ(g.edge_count(), 9u);
    for (std::size_t x = 0; x < 12; ++x) EXPECT_EQ(g.colors()[x], x / 4);
    EXPECT_TRUE(g.has_edge(4, 5));
    EXPECT_FALSE(g.has_edge(3, 4));
}

TEST(FlippedPaths, DiagonalFlipJoinsAPositionClass) {
    const Graph g = flipped_paths(3, 3, FlipSpec(3, {{1, 1}}));
    // position-1 vertices 1, 4, 7 become pairwise adjacent
    EXPECT_TRUE(g.has_edge(1, 4));
    EXPECT_TRUE(g.has_edge(1, 7));
    EXPECT_TRUE(g.has_edge(4, 7));
    EXPECT_EQ(g.edge_count(), 6u + 3u);
}

TEST(FlippedPaths, OffDiagonalFlipComplementsBetweenClasses) {
    const Graph g = flipped_paths(4, 3, FlipSpec(4, {{2, 3}, {3, 2}}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t i2 = 0; i2 < 3; ++i2) EXPECT_EQ(g.has_edge(i * 4 + 2, i2 * 4 + 3), i != i2);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_EQ(g.edge_count(), 9u - 3u + 6u);
}

TEST(FlippedPaths, Validation) {
    EXPECT_THROW(FlipSpec(3, {{0, 1}}), std::invalid_argument);
    EXPECT_THROW(FlipSpec(3, {{0, 3}, {3, 0}}), std::invalid_argument);
    EXPECT_THROW(flipped_paths(3, 3, FlipSpec(4, {})), std::invalid_argument);
    EXPECT_THROW(flipped_paths(1, 3, FlipSpec(1, {})), std::invalid_argument);
    EXPECT_THROW(flipped_paths(3, 4, FlipSpec(3, {})), std::invalid_argument);
}

TEST(FlipRecover, IdentityAndSingleFlip) {
    EXPECT_EQ(flip_recover(three_paths(5)), three_paths(5));
    EXPECT_EQ(flip_recover(flipped_paths(5, 3, FlipSpec(5, {{1, 1}}))), three_paths(5));
}

TEST(FlipRecover, ExhaustiveAtThreeAndFour) {
    for (std::size_t k : {3u, 4u}) {
        const std::size_t pairs = k * (k + 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            ASSERT_EQ(flip_recover(flipped_paths(k, 3, FlipSpec::from_mask(k, mask))), three_paths(k))
                << "k=" << k << " mask=" << mask;
    }
}

TEST(FlipRecover, SeededRandomSpecsAtEight) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        EXPECT_EQ(flip_recover(flipped_paths(8, 3, FlipSpec::random(8, rng))), three_paths(8)) << "seed " << seed;
    }
}

TEST(FlipRecover, NeedsColors) { EXPECT_THROW(flip_recover(Graph(3)), std::invalid_argument); }

TEST(PathCount, MatchesBruteForce) {
    EXPECT_EQ(labelled_path_count(2), 1);
    EXPECT_EQ(labelled_path_count(3), 3);
    EXPECT_EQ(labelled_path_count(4), 12);
    for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(labelled_path_count(k), brute::count_labelled_paths(k)) << "k=" << k;
    EXPECT_THROW(labelled_path_count(1), std::invalid_argument);
}

TEST(Induced, CopiesOfSmallGraphs) {
    EXPECT_TRUE(has_induced_copy(Graph::complete(2), half_graph(3)));
    EXPECT_FALSE(has_induced_copy(Graph::complete(3), half_graph(5))); // bipartite
    EXPECT_TRUE(has_induced_copy(Graph::path(4), half_graph(4)));
    EXPECT_FALSE(has_induced_copy(Graph::complete(5), Graph::complete(4)));
    EXPECT_TRUE(has_induced_copy(Graph(0), Graph(0)));
}

TEST(Induced, AgreesWithBruteEmbedding) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph p = random_graph(2 + rng() % 3, rng);
        const Graph h = random_graph(4 + rng() % 3, rng);
        EXPECT_EQ(has_induced_copy(p, h), brute::embeds(p, h)) << "trial " << trial;
    }
}

TEST(Count, ForbiddenEdge) {
    const auto spec = ClassSpec::forbidding({Graph::complete(2)});
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(count_labelled(spec, n), 1) << "n=" << n;
}

TEST(Count, HalfGraphAgeSmallN) {
    EXPECT_EQ(count_labelled(ClassSpec::generated_by({half_graph(6)}), 2), 2);
    const auto h8 = ClassSpec::generated_by({half_graph(8)});
    const long long expected[] = {1, 1, 2, 7, 38, 271};
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(count_labelled(h8, n), expected[n]) << "n=" << n;
}

TEST(Count, HalfGraphAgeMatchesSubsetOracle) {
    const auto h8 = ClassSpec::generated_by({half_graph(8)});
    for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(count_labelled(h8, n, 2), brute::count_half_graph_age(8, n)) << "n=" << n;
}

TEST(Count, HalfGraphGrowthLowerBound) {
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto spec = ClassSpec::generated_by({half_graph(2 * k)});
        const BigInt kf = factorial(k);
        EXPECT_GE(count_labelled(spec, 2 * k), kf * kf) << "k=" << k;
    }
}

TEST(Count, GeneratorAndForbiddenModesAgreeOnEdgeless) {
    const auto gen = ClassSpec::generated_by({Graph(7)});
    const auto forb = ClassSpec::forbidding({Graph::complete(2)});
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(count_labelled(gen, n), count_labelled(forb, n));
}

TEST(Count, GeneratorModeMatchesBruteEmbedding) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Graph> gens = {random_graph(5, rng), random_graph(6, rng)};
        const auto spec = ClassSpec::generated_by(gens);
        for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(count_labelled(spec, n), brute::count_generated(gens, n));
    }
}

TEST(Count, JobsDoNotChangeTheResult) {
    const auto spec = ClassSpec::forbidding({Graph::path(3)});
    const BigInt one = count_labelled(spec, 6, 1);
    EXPECT_EQ(count_labelled(spec, 6, 4), one);
    EXPECT_EQ(count_labelled(spec, 6, 7), one);
    // P_3-free graphs are disjoint unions of cliques: Bell numbers
    EXPECT_EQ(one, 203);
}

TEST(Count, IsHereditary) {
    const std::vector<ClassSpec> specs = {ClassSpec::generated_by({half_graph(4)}), ClassSpec::forbidding({Graph::path(4)}),
                                          ClassSpec::forbidding({Graph::complete(3), Graph(3)})};
    for (const auto& spec : specs)
        for (std::size_t n = 1; n <= 6; ++n) {
            const std::size_t pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                const Graph g = Graph::from_pair_mask(n, mask);
                if (!spec.contains(g)) continue;
                for (std::size_t drop = 0; drop < n; ++drop) {
                    std::vector<std::size_t> keep;
                    for (std::size_t v = 0; v < n; ++v)
                        if (v != drop) keep.push_back(v);
                    ASSERT_TRUE(spec.contains(g.induced(keep))) << "n=" << n << " mask=" << mask;
                }
            }
        }
}

TEST(Count, RejectsLargeN) {
    EXPECT_THROW(count_labelled(ClassSpec::forbidding({Graph::complete(2)}), max_labelled_n + 1), std::out_of_range);
}

TEST(Count, NodeBudgetRaisesCapacityError) {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    EXPECT_THROW(count_labelled(ClassSpec::generated_by({half_graph(8)}), 4, 1, tiny), capacity_error);
}

TEST(SemiInduced, Examples) {
    EXPECT_EQ(semi_induced_order(half_graph(4)), 4u);
    EXPECT_EQ(semi_induced_order(Graph(10)), 0u);
    EXPECT_EQ(semi_induced_order(Graph::complete_bipartite(3, 3)), 1u);
    for (std::size_t t = 1; t <= 5; ++t) EXPECT_EQ(semi_induced_order(half_graph(t)), t) << "t=" << t;
}

TEST(SemiInduced, WithinSidePairsAreUnconstrained) {
    // adding edges inside each side of H_3 keeps the order
    Graph g = half_graph(3);
    g.set_edge(0, 1);
    g.set_edge(3, 5);
    EXPECT_EQ(semi_induced_order(g), 3u);
}

TEST(SemiInduced, StrictAgreesWithBruteForce) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(5 + rng() % 3, rng);
        EXPECT_EQ(semi_induced_order(g), brute_semi_induced(g)) << "trial " << trial;
    }
}

TEST(SemiInduced, LaxIsAtLeastStrict) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(6, rng);
        EXPECT_GE(semi_induced_order(g, false), semi_induced_order(g, true));
    }
    // a triangle realises H_2 only when a_1 and b_0 may be the same vertex
    EXPECT_EQ(semi_induced_order(Graph::complete(3), true), 1u);
    EXPECT_EQ(semi_induced_order(Graph::complete(3), false), 2u);
}
