#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace p7cover {

/// Three n-sets S, A1, A2 with A1 and A2 cliques and s^j adjacent to a1^j
/// and a2^j. Variant 1 leaves S independent, variant 2 makes it a clique.
/// Numbering: s^j = j-1, a1^j = n+j-1, a2^j = 2n+j-1.
struct FamilyInstance {
    Graph graph;
    VertexSet s;
    VertexSet a1;
    VertexSet a2;
    std::vector<std::string> labels; // indexed by vertex: "s^1", "a_1^3", ...
    int variant = 1;
    std::size_t n = 0;
};

inline FamilyInstance build_example(int variant, std::size_t n) {
    if (variant != 1 && variant != 2) throw input_error("family variant must be 1 or 2, got " + std::to_string(variant));
    if (n == 0) throw input_error("family parameter n must be positive");
    if (3 * n > kMaxVertices) {
        throw capacity_error("family n=" + std::to_string(n) + " needs more than " + std::to_string(kMaxVertices) +
                             " vertices");
    }
    FamilyInstance fi;
    fi.variant = variant;
    fi.n = n;
    auto s = [](std::size_t j) { return static_cast<Vertex>(j); };
    auto a1 = [n](std::size_t j) { return static_cast<Vertex>(n + j); };
    auto a2 = [n](std::size_t j) { return static_cast<Vertex>(2 * n + j); };

    std::vector<Edge> edges;
    for (std::size_t j = 0; j < n; ++j) {
        edges.emplace_back(s(j), a1(j));
        edges.emplace_back(s(j), a2(j));
        for (std::size_t k = j + 1; k < n; ++k) {
            edges.emplace_back(a1(j), a1(k));
            edges.emplace_back(a2(j), a2(k));
            if (variant == 2) edges.emplace_back(s(j), s(k));
        }
    }
    fi.graph = Graph(3 * n, edges);
    fi.labels.resize(3 * n);
    for (std::size_t j = 0; j < n; ++j) {
        fi.s.insert(s(j));
        fi.a1.insert(a1(j));
        fi.a2.insert(a2(j));
        fi.labels[s(j)] = "s^" + std::to_string(j + 1);
        fi.labels[a1(j)] = "a_1^" + std::to_string(j + 1);
        fi.labels[a2(j)] = "a_2^" + std::to_string(j + 1);
    }
    return fi;
}

} // namespace p7cover
