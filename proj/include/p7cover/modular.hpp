#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace p7cover {

enum class QuotientKind { singleton, independent, clique, prime };

inline const char* to_string(QuotientKind k) {
    switch (k) {
    case QuotientKind::singleton: return "singleton";
    case QuotientKind::independent: return "independent";
    case QuotientKind::clique: return "clique";
    case QuotientKind::prime: return "prime";
    }
    return "?";
}

/// Top level of the modular decomposition of G[host]: the maximal strong
/// modules (ordered by minimum vertex), the quotient over part indices and
/// its kind.
struct ModularPartition {
    VertexSet host;
    std::vector<VertexSet> parts;
    Graph quotient;
    QuotientKind kind = QuotientKind::singleton;

    /// Index of the part holding v. Precondition: v in host.
    std::size_t part_of(Vertex v) const {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].contains(v)) return i;
        throw input_error("vertex " + std::to_string(v) + " not in partition host");
    }
};

/// Within G[host], every member of m sees the same vertices outside m.
inline bool is_module(const Graph& g, const VertexSet& host, const VertexSet& m) {
    g.check_subset(host);
    if (!m.is_subset_of(host)) throw input_error("is_module: " + to_string(m) + " not inside host " + to_string(host));
    if (m.size() <= 1) return true;
    const VertexSet outside = host - m;
    const VertexSet ref = g.adj(m.front()) & outside;
    for (Vertex v : m)
        if ((g.adj(v) & outside) != ref) return false;
    return true;
}

/// Smallest module of G[host] containing `seed`: keep absorbing every
/// outside vertex that sees some but not all of the current set.
inline VertexSet module_closure(const Graph& g, const VertexSet& host, VertexSet seed) {
    while (true) {
        if (seed.empty()) return seed;
        VertexSet any, common = host;
        for (Vertex v : seed) {
            any |= g.adj(v);
            common &= g.adj(v);
        }
        const VertexSet splitters = ((any - common) & host) - seed;
        if (splitters.empty()) return seed;
        seed |= splitters;
    }
}

namespace modular_detail {

inline std::vector<VertexSet> co_components(const Graph& g, const VertexSet& host) {
    std::vector<VertexSet> out;
    VertexSet left = host;
    while (!left.empty()) {
        VertexSet comp{left.front()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= (left - g.adj(v));
            next -= comp;
            comp |= next;
            frontier = next;
        }
        left -= comp;
        out.push_back(comp);
    }
    return out;
}

inline Graph quotient_of(const Graph& g, const std::vector<VertexSet>& parts) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (g.has_edge(parts[i].front(), parts[j].front()))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(parts.size(), edges);
}

} // namespace modular_detail

/// Mod(host) and Quo(host).
///
/// Disconnected host: parts are the components (independent quotient).
/// Disconnected complement: parts are the co-components (clique quotient).
/// Otherwise the maximal proper modules are pairwise disjoint and are the
/// maximal strong modules; the one holding v is the union of all proper
/// closures of pairs {v, u}.
inline ModularPartition modular_partition(const Graph& g, const VertexSet& host) {
    g.check_subset(host);
    if (host.empty()) throw input_error("modular_partition: empty host");

    ModularPartition mp;
    mp.host = host;
    if (host.size() == 1) {
        mp.parts = {host};
        mp.kind = QuotientKind::singleton;
    } else if (auto comps = components_within(g, host); comps.size() > 1) {
        mp.parts = std::move(comps);
        mp.kind = QuotientKind::independent;
    } else if (auto co = modular_detail::co_components(g, host); co.size() > 1) {
        mp.parts = std::move(co);
        mp.kind = QuotientKind::clique;
    } else {
        mp.kind = QuotientKind::prime;
        VertexSet assigned;
        for (Vertex v : host) {
            if (assigned.contains(v)) continue;
            VertexSet part{v};
            for (Vertex u : host - v) {
                const VertexSet m = module_closure(g, host, VertexSet{v, u});
                if (m != host) part |= m;
            }
            assigned |= part;
            mp.parts.push_back(part);
        }
        std::sort(mp.parts.begin(), mp.parts.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    }
    mp.quotient = modular_detail::quotient_of(g, mp.parts);
    return mp;
}

/// Minimum-id representatives of the lexicographically first pair of parts
/// adjacent in the quotient.
inline std::pair<Vertex, Vertex> pick_adjacent_module_reps(const ModularPartition& mp) {
    for (Vertex i = 0; i < mp.quotient.n(); ++i) {
        for (Vertex j : mp.quotient.adj(i)) {
            if (j > i) return {mp.parts[i].front(), mp.parts[j].front()};
        }
    }
    throw input_error("pick_adjacent_module_reps: quotient of " + to_string(mp.host) + " has no edge");
}

} // namespace p7cover
