#include <gtest/gtest.h>

#include <algorithm>

#include <p7cover/families.hpp>
#include <p7cover/oracle.hpp>
#include <p7cover/separators.hpp>

#include "support/brute.hpp"

using namespace p7cover;
using namespace p7cover::testing;

namespace {

std::vector<VertexSet> listed(const Graph& g) {
    std::vector<VertexSet> out;
    for (const auto& c : enumerate_minimal_separators(g)) out.push_back(c.s);
    return out;
}

} // namespace

TEST(FullComponents, Examples) {
    const Graph p4 = path_graph(4);
    auto c = full_components(p4, VertexSet{1});
    EXPECT_EQ(c.full_components, (std::vector<VertexSet>{{0}, {2, 3}}));
    EXPECT_TRUE(c.other_components.empty());
    EXPECT_TRUE(c.is_minimal());

    c = full_components(p4, VertexSet{0});
    EXPECT_EQ(c.full_components, (std::vector<VertexSet>{{1, 2, 3}}));
    EXPECT_FALSE(c.is_minimal());

    const auto ex1 = build_example(1, 5);
    EXPECT_EQ(full_components(ex1.graph, ex1.s).full_components, (std::vector<VertexSet>{ex1.a1, ex1.a2}));

    // {0,2} in P5: components {1} full, {3,4} sees only 2
    c = full_components(path_graph(5), VertexSet{0, 2});
    EXPECT_EQ(c.full_components, (std::vector<VertexSet>{{1}}));
    EXPECT_EQ(c.other_components, (std::vector<VertexSet>{{3, 4}}));
}

TEST(IsMinimalSeparator, Examples) {
    EXPECT_TRUE(is_minimal_separator(path_graph(4), VertexSet{1}));
    const Graph k5 = complete_graph(5);
    for (std::uint64_t mask = 1; mask < 32; ++mask) {
        VertexSet s;
        for (Vertex v : members(mask)) s.insert(v);
        EXPECT_FALSE(is_minimal_separator(k5, s));
    }
    const auto ex2 = build_example(2, 5);
    EXPECT_TRUE(is_minimal_separator(ex2.graph, ex2.s));
}

TEST(ValidateCertificate, RejectsTampering) {
    const Graph p4 = path_graph(4);
    auto c = full_components(p4, VertexSet{1});
    EXPECT_NO_THROW(validate_separator_certificate(p4, c));
    auto bad = c;
    bad.full_components[1] = VertexSet{2};
    EXPECT_THROW(validate_separator_certificate(p4, bad), input_error);
    EXPECT_THROW(validate_separator_certificate(p4, full_components(p4, VertexSet{0})), input_error);
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(listed(path_graph(4)), (std::vector<VertexSet>{{1}, {2}}));
    EXPECT_EQ(listed(cycle_graph(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
    EXPECT_TRUE(listed(complete_graph(6)).empty());
    EXPECT_TRUE(listed(Graph(1, std::span<const Edge>{})).empty());
    // disconnected: the empty set separates
    EXPECT_EQ(listed(Graph(2, std::span<const Edge>{})), (std::vector<VertexSet>{{}}));
}

TEST(Enumerate, MatchesMaskOracle) {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        const std::size_t n = 3 + seed % 8;
        const Graph g = gnp(n, 0.15 + 0.08 * static_cast<double>(seed % 6), seed * 7 + 3);
        const auto m = matrix_of(g);
        std::vector<VertexSet> brute;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (!brute_is_minimal_separator(m, mask)) continue;
            VertexSet s;
            for (Vertex v : members(mask)) s.insert(v);
            brute.push_back(s);
        }
        std::sort(brute.begin(), brute.end());
        const auto certs = enumerate_minimal_separators(g);
        EXPECT_EQ(listed(g), brute) << to_graph6(g);
        for (const auto& c : certs) EXPECT_NO_THROW(validate_separator_certificate(g, c));
    }
}

TEST(Enumerate, CapacityLimit) {
    EXPECT_THROW(enumerate_minimal_separators(cycle_graph(8), 3), capacity_error);
    EXPECT_EQ(enumerate_minimal_separators(cycle_graph(8)).size(), 20u);
}

TEST(Enumerate, InvariantUnderRelabelling) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gnp(9, 0.3, seed + 500);
        std::vector<Vertex> perm(9);
        for (Vertex i = 0; i < 9; ++i) perm[i] = (i * 4 + static_cast<Vertex>(seed)) % 9;
        std::vector<Edge> e;
        for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
        const Graph h(9, e);
        std::vector<VertexSet> mapped;
        for (const auto& s : listed(g)) {
            VertexSet t;
            for (Vertex v : s) t.insert(perm[v]);
            mapped.push_back(t);
        }
        std::sort(mapped.begin(), mapped.end());
        EXPECT_EQ(listed(h), mapped);
    }
}

TEST(Enumerate, DroppingAnyVertexReconnectsFullComponents) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Graph g = gnp(9, 0.3, seed + 4242);
        for (const auto& c : enumerate_minimal_separators(g)) {
            for (Vertex v : c.s) {
                const auto comps = components(g, c.s - v);
                const auto& a = c.full_components[0];
                const auto& b = c.full_components[1];
                const bool joined = std::any_of(comps.begin(), comps.end(), [&](const VertexSet& k) {
                    return a.is_subset_of(k) && b.is_subset_of(k);
                });
                EXPECT_TRUE(joined) << to_graph6(g) << " " << to_string(c.s) << " v=" << v;
            }
        }
    }
}
