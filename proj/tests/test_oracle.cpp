#include <gtest/gtest.h>

#include <p7cover/families.hpp>
#include <p7cover/oracle.hpp>

#include "support/brute.hpp"

using namespace p7cover;
using namespace p7cover::testing;

TEST(MinDominatingSet, Examples) {
    const auto e1 = build_example(1, 5);
    EXPECT_EQ(min_dominating_set_of(e1.graph, e1.s, e1.graph.vertices()).size(), 5u);
    const auto e2 = build_example(2, 5);
    EXPECT_EQ(min_dominating_set_of(e2.graph, e2.s, e2.graph.vertices() - e2.s).size(), 5u);
    EXPECT_EQ(min_dominating_set_of(e2.graph, e2.s, e2.graph.vertices()).size(), 1u);
    EXPECT_TRUE(min_dominating_set_of(e2.graph, VertexSet{}, VertexSet{}).empty());
}

TEST(MinDominatingSet, Errors) {
    const Graph g = path_graph(5);
    EXPECT_THROW(min_dominating_set_of(g, VertexSet{0}, VertexSet{3, 4}), no_solution_error);
    EXPECT_THROW(min_dominating_set_of(g, VertexSet{0}, g.vertices(), 3), capacity_error);
}

TEST(MinDominatingSet, AgreesWithSubsetScan) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gnp(9, 0.25, seed + 31337);
        const auto m = matrix_of(g);
        const std::uint64_t target = (seed * 2654435761ULL) & 511;
        const std::uint64_t pool = ~(seed * 40503ULL) & 511;
        VertexSet t, p;
        for (Vertex v : members(target)) t.insert(v);
        for (Vertex v : members(pool)) p.insert(v);
        const std::size_t expect = brute_min_domination(m, target, pool);
        if (expect == SIZE_MAX) {
            EXPECT_THROW(min_dominating_set_of(g, t, p), no_solution_error);
            continue;
        }
        const auto x = min_dominating_set_of(g, t, p);
        EXPECT_EQ(x.size(), expect);
        EXPECT_TRUE(x.is_subset_of(p));
        EXPECT_TRUE(t.is_subset_of(neighborhood(g, x, true)));
    }
}

TEST(BruteSeparators, Examples) {
    EXPECT_EQ(brute_minimal_separators(path_graph(4)), (std::vector<VertexSet>{{1}, {2}}));
    EXPECT_EQ(brute_minimal_separators(cycle_graph(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
    EXPECT_TRUE(brute_minimal_separators(complete_graph(4)).empty());
    EXPECT_THROW(brute_minimal_separators(path_graph(13)), capacity_error);
}

TEST(RandomPtFree, Examples) {
    const Graph empty = random_ptfree(6, 4, 0.0, 1);
    EXPECT_EQ(empty.edge_count(), 0u);
    const Graph full = random_ptfree(6, 4, 1.0, 1);
    EXPECT_EQ(full, complete_graph(6));
    const Graph g = random_ptfree(12, 7, 0.3, 42);
    EXPECT_EQ(g.n(), 12u);
    EXPECT_FALSE(has_induced_path(matrix_of(g), 7));
    EXPECT_EQ(random_ptfree(12, 7, 0.3, 42), g);
    EXPECT_THROW(random_ptfree(0, 7, 0.3, 1), input_error);
    EXPECT_THROW(random_ptfree(5, 3, 0.3, 1), input_error);
}

TEST(RandomPtFree, PostCondition) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t t = 4 + seed % 4;
        const Graph g = random_ptfree(8, t, 0.35, seed);
        EXPECT_FALSE(has_induced_path(matrix_of(g), t)) << to_graph6(g) << " t=" << t;
    }
}

TEST(Corpora, LabeledCounts) {
    // OEIS A001187 (connected labelled) and 2^(n choose 2)
    const std::size_t connected[] = {0, 1, 1, 4, 38, 728};
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t all = 0, conn = 0;
        for_each_labeled_graph(n, false, [&](const Graph&) { ++all; });
        for_each_labeled_graph(n, true, [&](const Graph&) { ++conn; });
        EXPECT_EQ(all, std::size_t{1} << (n * (n - 1) / 2));
        EXPECT_EQ(conn, connected[n]);
    }
    EXPECT_THROW(for_each_labeled_graph(9, false, [](const Graph&) {}), capacity_error);
}

TEST(Corpora, NonIsomorphicCounts) {
    // OEIS A000088
    const std::size_t classes[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), classes[n]) << n;
    EXPECT_THROW(nonisomorphic_graphs(8), capacity_error);
}
