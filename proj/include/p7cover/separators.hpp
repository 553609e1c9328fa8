#pragma once

#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace p7cover {

/// Proof that `s` is (or is not) a minimal separator: cc(G - s) split into
/// components with N(C) = s and the rest.
struct SeparatorCertificate {
    VertexSet s;
    std::vector<VertexSet> full_components;
    std::vector<VertexSet> other_components;

    bool is_minimal() const { return full_components.size() >= 2; }
    friend bool operator==(const SeparatorCertificate&, const SeparatorCertificate&) = default;
};

inline SeparatorCertificate full_components(const Graph& g, const VertexSet& s) {
    SeparatorCertificate cert{s, {}, {}};
    for (auto& comp : components(g, s)) {
        if (neighborhood(g, comp) == s) {
            cert.full_components.push_back(std::move(comp));
        } else {
            cert.other_components.push_back(std::move(comp));
        }
    }
    return cert;
}

inline bool is_minimal_separator(const Graph& g, const VertexSet& s) { return full_components(g, s).is_minimal(); }

/// Re-derives the certificate from scratch and demands it match and prove
/// minimality; throws input_error otherwise.
inline void validate_separator_certificate(const Graph& g, const SeparatorCertificate& cert) {
    g.check_subset(cert.s);
    const auto fresh = full_components(g, cert.s);
    if (!(fresh == cert)) throw input_error("separator certificate for " + to_string(cert.s) + " does not match the graph");
    if (!fresh.is_minimal()) {
        throw input_error(to_string(cert.s) + " is not a minimal separator (" +
                          std::to_string(fresh.full_components.size()) + " full components)");
    }
}

inline constexpr std::size_t kDefaultSeparatorLimit = 1'000'000;

/// All minimal separators, sorted by size then lexicographically.
///
/// Seeds are N(C) for every component C of G - N[v]; the closure step takes,
/// for a known separator S and x in S, N(C) for every component C of
/// G - (S ∪ N(x)). This reaches every minimal separator, each candidate is
/// re-checked before it is recorded.
inline std::vector<SeparatorCertificate> enumerate_minimal_separators(const Graph& g,
                                                                      std::size_t limit = kDefaultSeparatorLimit) {
    std::set<VertexSet> found;
    std::deque<VertexSet> queue;
    auto offer = [&](const VertexSet& s) {
        if (found.contains(s) || !is_minimal_separator(g, s)) return;
        if (found.size() >= limit) {
            throw capacity_error("more than " + std::to_string(limit) + " minimal separators");
        }
        found.insert(s);
        queue.push_back(s);
    };

    for (Vertex v = 0; v < g.n(); ++v) {
        for (const auto& comp : components(g, neighborhood(g, v, true))) offer(neighborhood(g, comp));
    }
    while (!queue.empty()) {
        const VertexSet s = queue.front();
        queue.pop_front();
        for (Vertex x : s) {
            for (const auto& comp : components(g, s | g.adj(x))) offer(neighborhood(g, comp));
        }
    }

    std::vector<SeparatorCertificate> out;
    out.reserve(found.size());
    for (const auto& s : found) out.push_back(full_components(g, s));
    return out;
}

} // namespace p7cover
