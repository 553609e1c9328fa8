#pragma once

// Brute-force reference routines and corpus generators. Nothing here shares
// code paths with the constructive algorithms they are used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "induced_paths.hpp"
#include "separators.hpp"

namespace p7cover {

inline constexpr std::size_t kDominationPoolLimit = 64;

namespace oracle_detail {

inline bool dominate_within(const Graph& g, const VertexSet& open, const VertexSet& pool, std::size_t budget,
                            std::vector<Vertex>& chosen) {
    if (open.empty()) return true;
    if (budget == 0) return false;
    const Vertex t = open.front();
    for (Vertex c : neighborhood(g, t, true) & pool) {
        chosen.push_back(c);
        if (dominate_within(g, open - neighborhood(g, c, true), pool, budget - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace oracle_detail

/// Minimum X ⊆ pool with target ⊆ N[X], by iterative deepening on |X|.
/// Each level branches on the closed neighbourhood of the first undominated
/// target vertex, which some member of X must hit.
inline VertexSet min_dominating_set_of(const Graph& g, const VertexSet& target, const VertexSet& pool,
                                       std::size_t max_pool = kDominationPoolLimit) {
    g.check_subset(target);
    g.check_subset(pool);
    if (pool.size() > max_pool) {
        throw capacity_error("min_dominating_set_of: pool of " + std::to_string(pool.size()) +
                             " exceeds exhaustive threshold " + std::to_string(max_pool));
    }
    if (!target.is_subset_of(neighborhood(g, pool, true))) {
        throw no_solution_error("min_dominating_set_of: " + to_string(target - neighborhood(g, pool, true)) +
                                " cannot be dominated from the pool");
    }
    for (std::size_t k = 0; k <= target.size(); ++k) {
        std::vector<Vertex> chosen;
        if (oracle_detail::dominate_within(g, target, pool, k, chosen)) return {chosen.begin(), chosen.end()};
    }
    throw invariant_violation("min_dominating_set_of: search exhausted on a dominable target");
}

inline constexpr std::size_t kBruteSeparatorMaxVertices = 12;

/// Every subset passing is_minimal_separator, via a full 2^n scan.
inline std::vector<VertexSet> brute_minimal_separators(const Graph& g,
                                                       std::size_t max_n = kBruteSeparatorMaxVertices) {
    if (g.n() > max_n) {
        throw capacity_error("brute_minimal_separators: n=" + std::to_string(g.n()) + " exceeds " +
                             std::to_string(max_n));
    }
    std::vector<VertexSet> out;
    const std::uint64_t total = std::uint64_t{1} << g.n();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < g.n(); ++v)
            if ((mask >> v) & 1U) s.insert(v);
        if (is_minimal_separator(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Random P_t-free graphs.

namespace oracle_detail {

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline std::size_t below(std::mt19937_64& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

inline Graph from_rows(const std::vector<VertexSet>& rows) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < rows.size(); ++u)
        for (Vertex v : rows[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph(rows.size(), edges);
}

} // namespace oracle_detail

inline constexpr std::size_t kRandomRepairAttempts = 16;

/// Samples G(n, edge_prob) and repairs it until no induced P_t remains:
/// each round finds an induced P_t and either adds a chord between two
/// non-consecutive path vertices or deletes a path edge, alternating.
/// Deterministic per seed; the post-condition is re-checked before return.
inline Graph random_ptfree(std::size_t n, std::size_t t, double edge_prob, std::uint64_t seed) {
    if (n == 0) throw input_error("random_ptfree: n must be positive");
    if (t < 4) throw input_error("random_ptfree: t must be at least 4");
    VertexSet::check_capacity(n);
    const std::size_t cap = 50 * n * n + 100;
    for (std::size_t attempt = 0; attempt < kRandomRepairAttempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        std::vector<VertexSet> rows(n);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (oracle_detail::unit(rng) < edge_prob) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        bool add_chord = true;
        for (std::size_t round = 0; round < cap; ++round) {
            const Graph g = oracle_detail::from_rows(rows);
            const auto w = find_induced_pt(g, t);
            if (!w) {
                if (!is_pt_free(g, t)) throw invariant_violation("random_ptfree: post-condition failed");
                return g;
            }
            const auto& p = w->vertices;
            Vertex a = 0, b = 0;
            if (add_chord) {
                const std::size_t i = oracle_detail::below(rng, t - 2);
                const std::size_t j = i + 2 + oracle_detail::below(rng, t - i - 2);
                a = p[i];
                b = p[j];
                rows[a].insert(b);
                rows[b].insert(a);
            } else {
                const std::size_t i = oracle_detail::below(rng, t - 1);
                a = p[i];
                b = p[i + 1];
                rows[a].erase(b);
                rows[b].erase(a);
            }
            add_chord = !add_chord;
        }
    }
    throw no_solution_error("random_ptfree: repair did not converge after " + std::to_string(kRandomRepairAttempts) +
                            " attempts");
}

// ---------------------------------------------------------------------------
// Exhaustive corpora.

/// Calls fn on every labelled graph on n vertices (optionally only the
/// connected ones), edges enumerated as bit masks over the pairs.
inline void for_each_labeled_graph(std::size_t n, bool connected_only, const std::function<void(const Graph&)>& fn) {
    if (n > 8) throw capacity_error("for_each_labeled_graph: n=" + std::to_string(n) + " exceeds 8");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) edges.push_back(pairs[i]);
        const Graph g(n, edges);
        if (connected_only && !is_connected_within(g, g.vertices())) continue;
        fn(g);
    }
}

namespace oracle_detail {

// Canonical code: the smallest upper-triangle bit string over all vertex
// orders that list degrees in non-increasing order.
inline std::uint64_t canonical_code(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const auto da = g.adj(a).size(), db = g.adj(b).size();
        return da != db ? da > db : a < b;
    });
    std::uint64_t best = ~std::uint64_t{0};
    // permute only within blocks of equal degree
    std::vector<std::size_t> block_start;
    for (std::size_t i = 0; i < n; ++i)
        if (i == 0 || g.adj(order[i]).size() != g.adj(order[i - 1]).size()) block_start.push_back(i);
    block_start.push_back(n);

    std::function<void(std::size_t)> rec = [&](std::size_t blk) {
        if (blk + 1 == block_start.size()) {
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1U : 0U);
            best = std::min(best, code);
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(block_start[blk]);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(block_start[blk + 1]);
        std::sort(first, last);
        do {
            rec(blk + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    return best;
}

} // namespace oracle_detail

/// One representative per isomorphism class on n vertices, grown vertex by
/// vertex from the classes on n-1 vertices.
inline std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
    if (n > 7) throw capacity_error("nonisomorphic_graphs: n=" + std::to_string(n) + " exceeds 7");
    std::vector<Graph> level{Graph(0, std::span<const Edge>{})};
    for (std::size_t k = 1; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const auto& base : level) {
            const auto edges = base.edges();
            const std::uint64_t subsets = std::uint64_t{1} << base.n();
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                auto grown = edges;
                for (Vertex v = 0; v < base.n(); ++v)
                    if ((mask >> v) & 1U) grown.emplace_back(v, static_cast<Vertex>(base.n()));
                Graph g(k, grown);
                if (seen.insert(oracle_detail::canonical_code(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace p7cover
