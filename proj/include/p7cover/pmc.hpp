#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "separators.hpp"

namespace p7cover {

/// A non-edge uv inside Ω together with a component of G - Ω whose
/// neighbourhood contains both endpoints.
struct NonEdgeCover {
    Vertex u;
    Vertex v;
    VertexSet component;
    friend bool operator==(const NonEdgeCover&, const NonEdgeCover&) = default;
};

struct PmcCertificate {
    VertexSet omega;
    std::vector<NonEdgeCover> nonedge_cover; // one entry per non-edge, (u < v) ascending
    friend bool operator==(const PmcCertificate&, const PmcCertificate&) = default;
};

struct PmcVerdict {
    std::optional<PmcCertificate> certificate;
    std::string violation; // empty iff certificate present
};

/// Checks both PMC conditions: no component of G - Ω is full to Ω, and every
/// non-edge inside Ω is covered by some component (the first by minimum id
/// is recorded).
inline PmcVerdict check_pmc(const Graph& g, const VertexSet& omega) {
    g.check_subset(omega);
    if (omega.empty()) throw input_error("check_pmc: empty vertex set");

    const auto comps = components(g, omega);
    std::vector<VertexSet> nbhd;
    nbhd.reserve(comps.size());
    for (const auto& c : comps) {
        nbhd.push_back(neighborhood(g, c));
        if (nbhd.back() == omega) {
            return {std::nullopt, "PMC1: component " + to_string(c) + " is full to " + to_string(omega)};
        }
    }

    PmcCertificate cert{omega, {}};
    for (Vertex u : omega) {
        for (Vertex v : (omega - g.adj(u))) {
            if (v <= u) continue;
            std::size_t i = 0;
            while (i < comps.size() && !(nbhd[i].contains(u) && nbhd[i].contains(v))) ++i;
            if (i == comps.size()) {
                return {std::nullopt, "PMC2: non-edge " + std::to_string(u) + "-" + std::to_string(v) + " is uncovered"};
            }
            cert.nonedge_cover.push_back({u, v, comps[i]});
        }
    }
    return {std::move(cert), {}};
}

inline std::optional<PmcCertificate> is_pmc(const Graph& g, const VertexSet& omega) {
    return check_pmc(g, omega).certificate;
}

inline void validate_pmc_certificate(const Graph& g, const PmcCertificate& cert) {
    const auto verdict = check_pmc(g, cert.omega);
    if (!verdict.certificate) throw input_error(to_string(cert.omega) + " is not a PMC: " + verdict.violation);
    // Coverage map is re-checked entry by entry; any covering component is acceptable.
    const auto comps = components(g, cert.omega);
    std::size_t nonedges = 0;
    for (Vertex u : cert.omega)
        for (Vertex v : cert.omega - g.adj(u))
            if (v > u) ++nonedges;
    if (cert.nonedge_cover.size() != nonedges) throw input_error("PMC certificate does not list every non-edge");
    for (const auto& e : cert.nonedge_cover) {
        if (std::find(comps.begin(), comps.end(), e.component) == comps.end()) {
            throw input_error("PMC certificate names " + to_string(e.component) + ", not a component of G - omega");
        }
        const VertexSet nb = neighborhood(g, e.component);
        if (g.has_edge(e.u, e.v) || !nb.contains(e.u) || !nb.contains(e.v)) {
            throw input_error("PMC certificate entry " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is wrong");
        }
    }
}

inline constexpr std::size_t kPmcScanMaxVertices = 20;

/// Subset scan; every Ω passing check_pmc, sorted by size then lexicographically.
inline std::vector<PmcCertificate> enumerate_pmcs(const Graph& g, std::size_t max_n = kPmcScanMaxVertices) {
    if (g.n() > max_n) {
        throw capacity_error("enumerate_pmcs: n=" + std::to_string(g.n()) + " exceeds subset-scan threshold " +
                             std::to_string(max_n));
    }
    std::vector<PmcCertificate> out;
    const std::uint64_t total = std::uint64_t{1} << g.n();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        VertexSet omega;
        for (Vertex v = 0; v < g.n(); ++v)
            if ((mask >> v) & 1U) omega.insert(v);
        if (auto cert = is_pmc(g, omega)) out.push_back(std::move(*cert));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.omega < b.omega; });
    return out;
}

/// For a component D of G - Ω, certifies N(D) as a minimal separator with D
/// among its full components. A failure contradicts the theory and is
/// reported as invariant_violation.
inline SeparatorCertificate nd_separator(const Graph& g, const PmcCertificate& pcert, const VertexSet& d) {
    const auto comps = components(g, pcert.omega);
    if (std::find(comps.begin(), comps.end(), d) == comps.end()) {
        throw input_error("nd_separator: " + to_string(d) + " is not a component of G - " + to_string(pcert.omega));
    }
    auto cert = full_components(g, neighborhood(g, d));
    const bool has_d = std::find(cert.full_components.begin(), cert.full_components.end(), d) != cert.full_components.end();
    if (!cert.is_minimal() || !has_d) {
        throw invariant_violation("N(" + to_string(d) + ") = " + to_string(cert.s) +
                                  " is not a minimal separator with that component full (omega " +
                                  to_string(pcert.omega) + ")");
    }
    return cert;
}

/// Repeated simplicial-vertex elimination.
inline bool is_chordal(const Graph& g) {
    VertexSet left = g.vertices();
    while (!left.empty()) {
        bool removed = false;
        for (Vertex v : left) {
            const VertexSet nb = g.adj(v) & left;
            if (is_clique(g, nb)) {
                left.erase(v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

inline constexpr std::size_t kCompletionOracleMaxVertices = 8;

/// Every inclusion-minimal chordal completion of g, as the completed graphs.
///
/// Each minimal completion is the fill graph of some elimination ordering
/// (eliminate along a perfect elimination ordering of it), so the minimal
/// completions are exactly the inclusion-minimal fill sets over all n!
/// orderings.
inline std::vector<Graph> minimal_chordal_completions(const Graph& g,
                                                      std::size_t max_n = kCompletionOracleMaxVertices) {
    if (g.n() > max_n) {
        throw capacity_error("chordal-completion oracle: n=" + std::to_string(g.n()) + " exceeds " +
                             std::to_string(max_n));
    }
    const std::size_t n = g.n();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});

    // fill sets keyed by upper-triangle bit index
    auto pair_index = [n](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * n + b;
    };
    std::set<std::vector<bool>> fills;
    do {
        std::vector<VertexSet> rows(n);
        for (Vertex v = 0; v < n; ++v) rows[v] = g.adj(v);
        std::vector<bool> fill(n * n, false);
        VertexSet left = g.vertices();
        for (Vertex v : order) {
            left.erase(v);
            const VertexSet nb = rows[v] & left;
            for (Vertex a : nb) {
                for (Vertex b : nb) {
                    if (a < b && !rows[a].contains(b)) {
                        rows[a].insert(b);
                        rows[b].insert(a);
                        fill[pair_index(a, b)] = true;
                    }
                }
            }
        }
        fills.insert(std::move(fill));
    } while (std::next_permutation(order.begin(), order.end()));

    auto subset = [](const std::vector<bool>& a, const std::vector<bool>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] && !b[i]) return false;
        return true;
    };
    std::vector<Graph> out;
    for (const auto& f : fills) {
        bool minimal = true;
        for (const auto& other : fills) {
            if (other != f && subset(other, f)) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        auto edges = g.edges();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (f[pair_index(a, b)]) edges.emplace_back(a, b);
        out.emplace_back(n, edges);
    }
    return out;
}

/// Maximal cliques of a chordal graph, read off a perfect elimination
/// ordering (candidate N[v] ∩ later vertices, keep the maximal ones).
inline std::set<VertexSet> chordal_maximal_cliques(const Graph& h) {
    std::vector<VertexSet> candidates;
    VertexSet left = h.vertices();
    while (!left.empty()) {
        std::optional<Vertex> simplicial;
        for (Vertex v : left) {
            if (is_clique(h, h.adj(v) & left)) {
                simplicial = v;
                break;
            }
        }
        if (!simplicial) throw input_error("chordal_maximal_cliques: graph is not chordal");
        candidates.push_back((h.adj(*simplicial) & left) | *simplicial);
        left.erase(*simplicial);
    }
    std::set<VertexSet> out;
    for (const auto& c : candidates) {
        bool maximal = true;
        for (const auto& d : candidates)
            if (d != c && c.is_subset_of(d)) maximal = false;
        if (maximal) out.insert(c);
    }
    return out;
}

/// Union of the maximal cliques over all minimal chordal completions.
inline std::set<VertexSet> pmcs_via_completions(const Graph& g, std::size_t max_n = kCompletionOracleMaxVertices) {
    std::set<VertexSet> out;
    for (const auto& h : minimal_chordal_completions(g, max_n)) {
        for (const auto& c : chordal_maximal_cliques(h)) out.insert(c);
    }
    return out;
}

inline bool pmc_oracle_via_completions(const Graph& g, const VertexSet& omega,
                                       std::size_t max_n = kCompletionOracleMaxVertices) {
    g.check_subset(omega);
    return pmcs_via_completions(g, max_n).contains(omega);
}

} // namespace p7cover
