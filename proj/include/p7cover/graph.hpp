#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace p7cover {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with bit-set rows.
class Graph {
public:
    Graph() = default;

    /// Throws input_error on self-loops or out-of-range endpoints.
    /// Duplicate edges (in either orientation) collapse.
    Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n) {
        VertexSet::check_capacity(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) {
                throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
            }
            if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
            adj_[u].insert(v);
            adj_[v].insert(u);
        }
    }
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t n() const { return n_; }
    const VertexSet& adj(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }
    bool has_edge(Vertex u, Vertex v) const { return u < n_ && adj_[u].contains(v); }

    VertexSet vertices() const { return VertexSet::range(n_); }

    /// All edges (u < v), sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& row : adj_) m += row.size();
        return m / 2;
    }

    void check_vertex(Vertex v) const {
        if (v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
    void check_subset(const VertexSet& x) const {
        if (x.upper_bound() > n_) {
            throw input_error("vertex set " + to_string(x) + " not contained in 0.." + std::to_string(n_));
        }
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> adj_;
};

/// N(X) when `closed` is false, N[X] otherwise.
inline VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed = false) {
    g.check_subset(x);
    VertexSet out;
    for (Vertex v : x) out |= g.adj(v);
    if (closed) return out | x;
    return out - x;
}

inline VertexSet neighborhood(const Graph& g, Vertex v, bool closed = false) {
    return neighborhood(g, VertexSet{v}, closed);
}

/// Connected components of G[within], ordered by minimum vertex.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    g.check_subset(within);
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp{left.front()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.adj(v);
            next &= left;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        left -= comp;
        out.push_back(comp);
    }
    return out;
}

/// cc(G - removed), ordered by minimum vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {}) {
    g.check_subset(removed);
    return components_within(g, g.vertices() - removed);
}

inline bool is_connected_within(const Graph& g, const VertexSet& within) {
    return within.empty() || components_within(g, within).size() == 1;
}

/// Every pair (u in a, v in b) is an edge. Throws on overlapping sets.
inline bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    g.check_subset(a);
    g.check_subset(b);
    if (a.intersects(b)) throw input_error("is_complete_between: sets overlap on " + to_string(a & b));
    for (Vertex u : a)
        if (!b.is_subset_of(g.adj(u))) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& x) {
    g.check_subset(x);
    for (Vertex u : x)
        if (!(x - u).is_subset_of(g.adj(u))) return false;
    return true;
}

inline bool is_independent(const Graph& g, const VertexSet& x) {
    g.check_subset(x);
    for (Vertex u : x)
        if (g.adj(u).intersects(x)) return false;
    return true;
}

/// G[x] relabelled onto 0..|x|-1 in ascending order of original id.
inline Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    g.check_subset(x);
    const auto ids = x.to_vector();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.has_edge(ids[i], ids[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(ids.size(), edges);
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

/// Minimum-id member of N(v) ∩ within.
inline Vertex first_neighbor_in(const Graph& g, Vertex v, const VertexSet& within) {
    const VertexSet hit = g.adj(v) & within;
    if (hit.empty()) {
        throw input_error("vertex " + std::to_string(v) + " has no neighbour in " + to_string(within));
    }
    return hit.front();
}

} // namespace p7cover
