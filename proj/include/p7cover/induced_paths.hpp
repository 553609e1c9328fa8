#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace p7cover {

/// Vertices of an induced path, in path order.
struct InducedPathWitness {
    std::vector<Vertex> vertices;

    std::size_t size() const { return vertices.size(); }
    friend bool operator==(const InducedPathWitness&, const InducedPathWitness&) = default;
};

inline std::string to_string(const InducedPathWitness& w) {
    std::string out;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(w.vertices[i]);
    }
    return out;
}

/// Distinct in-range vertices; consecutive pairs adjacent, all others not.
inline bool is_induced_path(const Graph& g, const std::vector<Vertex>& path) {
    VertexSet seen;
    for (Vertex v : path) {
        if (v >= g.n() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            if (g.has_edge(path[i], path[j]) != (j == i + 1)) return false;
        }
    }
    return true;
}

inline bool is_induced_path(const Graph& g, const InducedPathWitness& w) { return is_induced_path(g, w.vertices); }

namespace paths_detail {

// Extends `path` (tip = back) by DFS. `blocked` is N[] of all non-tip
// vertices, so any neighbour of the tip outside it keeps the path induced.
inline bool extend(const Graph& g, std::vector<Vertex>& path, const VertexSet& blocked, std::size_t t) {
    if (path.size() == t) return true;
    const Vertex tip = path.back();
    const VertexSet grown = blocked | neighborhood(g, tip, true);
    for (Vertex w : g.adj(tip) - blocked) {
        path.push_back(w);
        if (extend(g, path, grown, t)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace paths_detail

/// Some induced P_t, searching start vertices and extensions in ascending
/// id order; the first one found is returned.
inline std::optional<InducedPathWitness> find_induced_pt(const Graph& g, std::size_t t) {
    if (t == 0) throw input_error("find_induced_pt: t must be positive");
    if (t > g.n()) return std::nullopt;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<Vertex> path{v};
        if (paths_detail::extend(g, path, VertexSet{}, t)) return InducedPathWitness{std::move(path)};
    }
    return std::nullopt;
}

inline bool is_pt_free(const Graph& g, std::size_t t) { return !find_induced_pt(g, t).has_value(); }

/// Induced path u-d1-d2-d3 with d1, d2, d3 in d.
inline std::optional<InducedPathWitness> find_induced_p4_from(const Graph& g, Vertex u, const VertexSet& d) {
    g.check_vertex(u);
    g.check_subset(d);
    if (d.contains(u)) throw input_error("find_induced_p4_from: vertex " + std::to_string(u) + " lies in D");
    const VertexSet nu = neighborhood(g, u, true);
    for (Vertex d1 : g.adj(u) & d) {
        const VertexSet n1 = neighborhood(g, d1, true);
        for (Vertex d2 : (g.adj(d1) & d) - nu) {
            const VertexSet d3s = ((g.adj(d2) & d) - nu) - n1;
            if (!d3s.empty()) return InducedPathWitness{{u, d1, d2, d3s.front()}};
        }
    }
    return std::nullopt;
}

/// Shortest u -> x path whose internal vertices lie in `interior`.
/// BFS expands in ascending id order, so the result is deterministic.
inline std::vector<Vertex> shortest_path_through(const Graph& g, Vertex u, Vertex x, const VertexSet& interior) {
    g.check_vertex(u);
    g.check_vertex(x);
    g.check_subset(interior);
    if (interior.contains(u) || interior.contains(x)) {
        throw input_error("shortest_path_through: endpoints must lie outside the interior");
    }
    if (u == x) return {u};
    if (g.has_edge(u, x)) return {u, x};

    std::vector<Vertex> parent(g.n(), static_cast<Vertex>(g.n()));
    VertexSet visited{u};
    std::vector<Vertex> frontier{u};
    std::optional<Vertex> last;
    while (!frontier.empty() && !last) {
        std::vector<Vertex> next;
        for (Vertex f : frontier) {
            for (Vertex w : g.adj(f) & interior) {
                if (visited.contains(w)) continue;
                visited.insert(w);
                parent[w] = f;
                next.push_back(w);
                if (!last && g.has_edge(w, x)) last = w;
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    if (!last) {
        throw input_error("shortest_path_through: no path from " + std::to_string(u) + " to " + std::to_string(x) +
                          " through " + to_string(interior));
    }
    std::vector<Vertex> path{x};
    for (Vertex w = *last; w != u; w = parent[w]) path.push_back(w);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    if (!is_induced_path(g, path)) {
        throw invariant_violation("shortest_path_through produced a path with a chord");
    }
    return path;
}

} // namespace p7cover
