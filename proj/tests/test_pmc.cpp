#include <gtest/gtest.h>

#include <set>

#include <p7cover/pmc.hpp>
#include <p7cover/separators.hpp>

#include "support/brute.hpp"

using namespace p7cover;
using namespace p7cover::testing;

namespace {

std::vector<VertexSet> omegas(const Graph& g) {
    std::vector<VertexSet> out;
    for (const auto& p : enumerate_pmcs(g)) out.push_back(p.omega);
    return out;
}

bool matrix_chordal(Matrix m) {
    const std::size_t n = m.size();
    std::vector<bool> gone(n, false);
    for (std::size_t round = 0; round < n; ++round) {
        bool found = false;
        for (Vertex v = 0; v < n && !found; ++v) {
            if (gone[v]) continue;
            std::vector<Vertex> nb;
            for (Vertex w = 0; w < n; ++w)
                if (!gone[w] && m[v][w]) nb.push_back(w);
            bool simplicial = true;
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!m[nb[i]][nb[j]]) simplicial = false;
            if (simplicial) {
                gone[v] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

// PMCs as maximal cliques of minimal triangulations, by scanning every
// subset of non-edges as fill.
std::set<std::uint64_t> fill_subset_pmcs(const Graph& g) {
    const auto m = matrix_of(g);
    const std::size_t n = g.n();
    std::vector<std::pair<Vertex, Vertex>> holes;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!m[u][v]) holes.emplace_back(u, v);
    std::vector<std::uint64_t> chordal_fills;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << holes.size()); ++f) {
        Matrix h = m;
        for (std::size_t i = 0; i < holes.size(); ++i)
            if ((f >> i) & 1U) h[holes[i].first][holes[i].second] = h[holes[i].second][holes[i].first] = true;
        if (matrix_chordal(h)) chordal_fills.push_back(f);
    }
    std::set<std::uint64_t> out;
    for (auto f : chordal_fills) {
        bool minimal = true;
        for (auto o : chordal_fills)
            if (o != f && (o & f) == o) minimal = false;
        if (!minimal) continue;
        Matrix h = m;
        for (std::size_t i = 0; i < holes.size(); ++i)
            if ((f >> i) & 1U) h[holes[i].first][holes[i].second] = h[holes[i].second][holes[i].first] = true;
        std::vector<std::uint64_t> cliques;
        for (std::uint64_t c = 1; c < (std::uint64_t{1} << n); ++c) {
            bool clique = true;
            for (Vertex a : members(c))
                for (Vertex b : members(c))
                    if (a < b && !h[a][b]) clique = false;
            if (clique) cliques.push_back(c);
        }
        for (auto c : cliques) {
            bool maximal = true;
            for (auto d : cliques)
                if (d != c && (d & c) == c) maximal = false;
            if (maximal) out.insert(c);
        }
    }
    return out;
}

} // namespace

TEST(CheckPmc, Examples) {
    const Graph p4 = path_graph(4);
    const auto c = is_pmc(p4, VertexSet{1, 2});
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(c->nonedge_cover.empty());

    const Graph c4 = cycle_graph(4); // a=0 b=1 c=2 d=3
    const auto c2 = is_pmc(c4, VertexSet{0, 1, 2});
    ASSERT_TRUE(c2.has_value());
    ASSERT_EQ(c2->nonedge_cover.size(), 1u);
    EXPECT_EQ(c2->nonedge_cover[0], (NonEdgeCover{0, 2, VertexSet{3}}));

    const auto v = check_pmc(p4, VertexSet{0, 2});
    EXPECT_FALSE(v.certificate.has_value());
    EXPECT_EQ(v.violation.rfind("PMC1", 0), 0u);
    const auto v2 = check_pmc(Graph(3, std::span<const Edge>{}), VertexSet{0, 1});
    EXPECT_EQ(v2.violation.rfind("PMC2", 0), 0u);
    EXPECT_THROW(check_pmc(p4, VertexSet{}), input_error);
}

TEST(ValidatePmcCertificate, Tampering) {
    const Graph c4 = cycle_graph(4);
    auto cert = *is_pmc(c4, VertexSet{0, 1, 2});
    EXPECT_NO_THROW(validate_pmc_certificate(c4, cert));
    auto bad = cert;
    bad.nonedge_cover[0].component = VertexSet{1};
    EXPECT_THROW(validate_pmc_certificate(c4, bad), input_error);
    bad = cert;
    bad.nonedge_cover.clear();
    EXPECT_THROW(validate_pmc_certificate(c4, bad), input_error);
    EXPECT_THROW(validate_pmc_certificate(c4, PmcCertificate{VertexSet{0, 2}, {}}), input_error);
}

TEST(EnumeratePmcs, Examples) {
    EXPECT_EQ(omegas(path_graph(4)), (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(omegas(complete_graph(3)), (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_EQ(omegas(cycle_graph(4)), (std::vector<VertexSet>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    EXPECT_THROW(enumerate_pmcs(path_graph(6), 5), capacity_error);
}

TEST(NdSeparator, Examples) {
    const Graph c4 = cycle_graph(4);
    const auto p = *is_pmc(c4, VertexSet{0, 1, 2});
    const auto s = nd_separator(c4, p, VertexSet{3});
    EXPECT_EQ(s.s, (VertexSet{0, 2}));
    EXPECT_EQ(s.full_components, (std::vector<VertexSet>{{1}, {3}}));

    const Graph p4 = path_graph(4);
    const auto q = *is_pmc(p4, VertexSet{1, 2});
    auto s0 = nd_separator(p4, q, VertexSet{0});
    EXPECT_EQ(s0.s, VertexSet{1});
    EXPECT_EQ(s0.full_components, (std::vector<VertexSet>{{0}, {2, 3}}));
    auto s3 = nd_separator(p4, q, VertexSet{3});
    EXPECT_EQ(s3.s, VertexSet{2});
    EXPECT_EQ(s3.full_components, (std::vector<VertexSet>{{0, 1}, {3}}));
    EXPECT_THROW(nd_separator(p4, q, VertexSet{0, 3}), input_error);
}

TEST(NdSeparator, HoldsOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gnp(8, 0.35, seed + 31);
        for (const auto& p : enumerate_pmcs(g))
            for (const auto& d : components(g, p.omega)) {
                const auto s = nd_separator(g, p, d);
                EXPECT_TRUE(brute_is_minimal_separator(matrix_of(g), mask_of(s.s)));
            }
    }
}

TEST(Chordal, Basics) {
    EXPECT_TRUE(is_chordal(path_graph(5)));
    EXPECT_TRUE(is_chordal(complete_graph(5)));
    EXPECT_FALSE(is_chordal(cycle_graph(4)));
    EXPECT_FALSE(is_chordal(cycle_graph(7)));
    EXPECT_EQ(minimal_chordal_completions(cycle_graph(4)).size(), 2u);
    EXPECT_EQ(minimal_chordal_completions(cycle_graph(5)).size(), 5u);
    EXPECT_THROW(minimal_chordal_completions(path_graph(10)), capacity_error);
    EXPECT_THROW(chordal_maximal_cliques(cycle_graph(4)), input_error);
    EXPECT_EQ(chordal_maximal_cliques(path_graph(3)), (std::set<VertexSet>{{0, 1}, {1, 2}}));
}

TEST(CompletionOracle, Examples) {
    EXPECT_TRUE(pmc_oracle_via_completions(complete_graph(3), VertexSet{0, 1, 2}));
    EXPECT_TRUE(pmc_oracle_via_completions(path_graph(4), VertexSet{1, 2}));
    EXPECT_FALSE(pmc_oracle_via_completions(path_graph(4), VertexSet{0, 2}));
}

TEST(CompletionOracle, AgreesWithFillSubsetScanAndPmcConditions) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const std::size_t n = 3 + seed % 4;
        const Graph g = gnp(n, 0.3 + 0.1 * static_cast<double>(seed % 3), seed + 9000);
        std::set<std::uint64_t> via_completions;
        for (const auto& s : pmcs_via_completions(g)) via_completions.insert(mask_of(s));
        EXPECT_EQ(via_completions, fill_subset_pmcs(g)) << to_graph6(g);
        std::set<std::uint64_t> via_conditions;
        for (const auto& o : omegas(g)) via_conditions.insert(mask_of(o));
        EXPECT_EQ(via_conditions, via_completions) << to_graph6(g);
    }
}

TEST(EnumeratePmcs, EverySeparatorLiesInSomePmc) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gnp(9, 0.3, seed + 808);
        const auto pmcs = enumerate_pmcs(g);
        for (const auto& c : enumerate_minimal_separators(g)) {
            const bool inside = std::any_of(pmcs.begin(), pmcs.end(),
                                            [&](const PmcCertificate& p) { return c.s.is_subset_of(p.omega); });
            EXPECT_TRUE(inside) << to_graph6(g) << " " << to_string(c.s);
        }
    }
}
