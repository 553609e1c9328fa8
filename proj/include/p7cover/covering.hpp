#pragma once

// Constructive domination of minimal separators and potential maximal
// cliques in P_t-free graphs. Every routine returns either a cover that has
// been re-checked against the graph, or an induced path that certifies the
// input lies outside the graph class. Steps whose correctness is a theorem
// (rather than a consequence of P_t-freeness) are asserted and reported as
// invariant_violation if they ever fail.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "induced_paths.hpp"
#include "modular.hpp"
#include "pmc.hpp"
#include "separators.hpp"

namespace p7cover {

inline constexpr std::size_t kSeparatorCoverBound = 22;
inline constexpr std::size_t kPmcCoverBound = 68;

struct NamedSet {
    std::string name;
    VertexSet members;
    friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct Cover {
    VertexSet vertices;
    std::vector<std::pair<Vertex, Vertex>> dominators; // target vertex -> cover vertex in its closed neighbourhood
    std::vector<NamedSet> breakdown;
    std::size_t bound = 0;

    const VertexSet* part(const std::string& name) const {
        for (const auto& ns : breakdown)
            if (ns.name == name) return &ns.members;
        return nullptr;
    }
};

struct CoverOutcome {
    VertexSet target;
    std::variant<Cover, InducedPathWitness> result;

    bool has_cover() const { return std::holds_alternative<Cover>(result); }
    const Cover& cover() const { return std::get<Cover>(result); }
    const InducedPathWitness& witness() const { return std::get<InducedPathWitness>(result); }
};

/// target ⊆ N[cover] and |cover| ≤ bound.
inline bool validates_as_cover(const Graph& g, const VertexSet& target, const Cover& c) {
    if (c.vertices.size() > c.bound) return false;
    if (!target.is_subset_of(neighborhood(g, c.vertices, true))) return false;
    for (auto [t, d] : c.dominators) {
        if (!target.contains(t) || !c.vertices.contains(d) || !(t == d || g.has_edge(t, d))) return false;
    }
    return c.dominators.size() == target.size();
}

namespace covering_detail {

inline Cover make_cover(const Graph& g, const VertexSet& target, const VertexSet& vertices,
                        std::vector<NamedSet> breakdown, std::size_t bound) {
    Cover c{vertices, {}, std::move(breakdown), bound};
    for (Vertex t : target) {
        const VertexSet hit = neighborhood(g, t, true) & vertices;
        if (hit.empty()) {
            throw invariant_violation("cover " + to_string(vertices) + " misses target vertex " + std::to_string(t));
        }
        c.dominators.emplace_back(t, hit.front());
    }
    if (vertices.size() > bound) {
        throw invariant_violation("cover " + to_string(vertices) + " exceeds bound " + std::to_string(bound));
    }
    return c;
}

inline InducedPathWitness make_witness(const Graph& g, std::vector<Vertex> path, std::size_t t, const char* where) {
    if (path.size() != t || !is_induced_path(g, path)) {
        throw invariant_violation(std::string(where) + ": assembled path " + to_string(InducedPathWitness{path}) +
                                  " is not an induced P" + std::to_string(t));
    }
    return InducedPathWitness{std::move(path)};
}

struct Sides {
    VertexSet s;
    VertexSet a1;
    VertexSet a2;
    const VertexSet& comp(int side) const { return side == 1 ? a1 : a2; }
};

inline Sides sides_of(const Graph& g, const SeparatorCertificate& cert) {
    validate_separator_certificate(g, cert);
    return {cert.s, cert.full_components[0], cert.full_components[1]};
}

inline void check_side(int side) {
    if (side != 1 && side != 2) throw input_error("side must be 1 or 2, got " + std::to_string(side));
}

} // namespace covering_detail

// ---------------------------------------------------------------------------
// P5-free: one vertex from each of two full components.

/// Cover {min A1, min A2}. If some s escapes it, the two shortest paths from
/// s into A1 and A2 form an induced path with at least five vertices and the
/// five centred on s are returned instead.
inline CoverOutcome cover_separator_p5(const Graph& g, const SeparatorCertificate& cert) {
    const auto sides = covering_detail::sides_of(g, cert);
    const Vertex a = sides.a1.front();
    const Vertex b = sides.a2.front();
    const VertexSet covered = g.adj(a) | g.adj(b);
    const VertexSet missed = sides.s - covered;
    if (missed.empty()) {
        return {sides.s, covering_detail::make_cover(g, sides.s, VertexSet{a, b},
                                                     {{"A", VertexSet{a}}, {"B", VertexSet{b}}}, 2)};
    }
    const Vertex s = missed.front();
    auto into_a = shortest_path_through(g, s, a, sides.a1 - a);
    const auto into_b = shortest_path_through(g, s, b, sides.a2 - b);
    std::reverse(into_a.begin(), into_a.end());
    const std::size_t centre = into_a.size() - 1;
    into_a.insert(into_a.end(), into_b.begin() + 1, into_b.end());
    std::vector<Vertex> window(into_a.begin() + static_cast<std::ptrdiff_t>(centre - 2),
                               into_a.begin() + static_cast<std::ptrdiff_t>(centre + 3));
    return {sides.s, covering_detail::make_witness(g, std::move(window), 5, "cover_separator_p5")};
}

// ---------------------------------------------------------------------------
// P6-free: at most three vertices from each of two full components, by search.

struct SplitCover {
    VertexSet a_prime;
    VertexSet b_prime;
    friend bool operator==(const SplitCover&, const SplitCover&) = default;
};

/// Non-empty A' ⊆ A1, B' ⊆ A2 with |A'|, |B'| ≤ 3 and S ⊆ N(A') ∪ N(B').
/// Smallest |A'| + |B'| wins; ties go to the lexicographically smallest
/// sequence A' followed by B'. Absent when no such pair exists.
inline std::optional<SplitCover> cover_separator_p6_search(const Graph& g, const SeparatorCertificate& cert) {
    const auto sides = covering_detail::sides_of(g, cert);
    struct Choice {
        VertexSet set;
        VertexSet hits;
    };
    auto small_subsets = [&](const VertexSet& comp) {
        std::vector<Choice> out;
        const auto ids = comp.to_vector();
        const std::size_t k = ids.size();
        for (std::size_t i = 0; i < k; ++i) {
            out.push_back({VertexSet{ids[i]}, g.adj(ids[i]) & sides.s});
            for (std::size_t j = i + 1; j < k; ++j) {
                out.push_back({VertexSet{ids[i], ids[j]}, (g.adj(ids[i]) | g.adj(ids[j])) & sides.s});
                for (std::size_t l = j + 1; l < k; ++l) {
                    out.push_back({VertexSet{ids[i], ids[j], ids[l]},
                                   (g.adj(ids[i]) | g.adj(ids[j]) | g.adj(ids[l])) & sides.s});
                }
            }
        }
        return out;
    };
    const auto left = small_subsets(sides.a1);
    const auto right = small_subsets(sides.a2);

    auto sequence = [](const SplitCover& c) {
        auto v = c.a_prime.to_vector();
        const auto w = c.b_prime.to_vector();
        v.insert(v.end(), w.begin(), w.end());
        return v;
    };
    for (std::size_t total = 2; total <= 6; ++total) {
        std::optional<SplitCover> best;
        for (const auto& l : left) {
            if (l.set.size() >= total || total - l.set.size() > 3) continue;
            const VertexSet need = sides.s - l.hits;
            for (const auto& r : right) {
                if (r.set.size() != total - l.set.size() || !need.is_subset_of(r.hits)) continue;
                SplitCover cand{l.set, r.set};
                if (!best || sequence(cand) < sequence(*best)) best = cand;
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Type classification of separator vertices against one full component.

enum class TypeLabel : char { a = 'a', b = 'b', c = 'c' };

struct TypeClassification {
    int side = 1;
    VertexSet component;
    Vertex p = 0;
    Vertex q = 0;
    ModularPartition partition;
    std::map<Vertex, TypeLabel> labels;
    std::map<Vertex, InducedPathWitness> p4; // type-b vertices: x-d1-d2-d3 into the component

    TypeLabel label(Vertex x) const {
        const auto it = labels.find(x);
        if (it == labels.end()) throw input_error("vertex " + std::to_string(x) + " is not in the separator");
        return it->second;
    }
    VertexSet of_type(TypeLabel t) const {
        VertexSet out;
        for (auto [x, l] : labels)
            if (l == t) out.insert(x);
        return out;
    }
};

/// Neighbourhood of x inside the host is a union of parts of the partition.
inline bool is_union_of_parts(const Graph& g, const ModularPartition& mp, Vertex x) {
    const VertexSet nb = g.adj(x) & mp.host;
    for (const auto& part : mp.parts) {
        const VertexSet hit = nb & part;
        if (!hit.empty() && hit != part) return false;
    }
    return true;
}

/// Labels every x in S against A_side: (a) x sees p or q, (b) otherwise an
/// induced P4 leaves x into A_side, (c) neither. For (c) the quotient of
/// A_side must be a clique and N(x) ∩ A_side a union of its maximal strong
/// modules; this holds in every graph and is asserted.
inline TypeClassification classify_types(const Graph& g, const SeparatorCertificate& cert, int side) {
    covering_detail::check_side(side);
    const auto sides = covering_detail::sides_of(g, cert);
    TypeClassification tc;
    tc.side = side;
    tc.component = sides.comp(side);
    if (tc.component.size() < 2) {
        throw input_error("classify_types: full component " + to_string(tc.component) + " is a singleton");
    }
    tc.partition = modular_partition(g, tc.component);
    std::tie(tc.p, tc.q) = pick_adjacent_module_reps(tc.partition);

    for (Vertex x : sides.s) {
        if (g.has_edge(x, tc.p) || g.has_edge(x, tc.q)) {
            tc.labels[x] = TypeLabel::a;
        } else if (auto p4 = find_induced_p4_from(g, x, tc.component)) {
            tc.labels[x] = TypeLabel::b;
            tc.p4.emplace(x, std::move(*p4));
        } else {
            tc.labels[x] = TypeLabel::c;
            if (tc.partition.kind != QuotientKind::clique || !is_union_of_parts(g, tc.partition, x)) {
                throw invariant_violation("type-c vertex " + std::to_string(x) + " on side " + std::to_string(side) +
                                          ": quotient is " + to_string(tc.partition.kind) +
                                          ", neighbourhood " + to_string(g.adj(x) & tc.component) +
                                          " is not a union of maximal strong modules");
            }
        }
    }
    return tc;
}

/// For type-c x, y: the first non-edge between A∩(N(x)∖N(y)) and
/// A∩(N(y)∖N(x)), or absent when the two sets are complete to each other.
inline std::optional<Edge> find_cross_nonedge(const Graph& g, const TypeClassification& tc, Vertex x, Vertex y) {
    if (tc.label(x) != TypeLabel::c || tc.label(y) != TypeLabel::c) {
        throw input_error("complete_cross_check: " + std::to_string(x) + " and " + std::to_string(y) +
                          " must both be type c");
    }
    const VertexSet only_x = (g.adj(x) - g.adj(y)) & tc.component;
    const VertexSet only_y = (g.adj(y) - g.adj(x)) & tc.component;
    for (Vertex u : only_x) {
        const VertexSet missing = only_y - g.adj(u);
        if (!missing.empty()) return Edge{u, missing.front()};
    }
    return std::nullopt;
}

inline bool complete_cross_check(const Graph& g, const TypeClassification& tc, Vertex x, Vertex y) {
    return !find_cross_nonedge(g, tc, x, y).has_value();
}

inline bool complete_cross_check(const Graph& g, const SeparatorCertificate& cert, int side, Vertex x, Vertex y) {
    return complete_cross_check(g, classify_types(g, cert, side), x, y);
}

// ---------------------------------------------------------------------------
// Butterflies among doubly type-c vertices.

/// A pair x < y of S_cc incomparable under both neighbourhood quasi-orders,
/// with the minimum-id witness from each of the four difference sets.
struct Butterfly {
    Vertex x = 0;
    Vertex y = 0;
    Vertex u1x = 0; // A1 ∩ (N(x) ∖ N(y))
    Vertex u1y = 0; // A1 ∩ (N(y) ∖ N(x))
    Vertex u2x = 0; // A2 ∩ (N(x) ∖ N(y))
    Vertex u2y = 0; // A2 ∩ (N(y) ∖ N(x))
    friend bool operator==(const Butterfly&, const Butterfly&) = default;
};

namespace covering_detail {

inline std::optional<Butterfly> as_butterfly(const Graph& g, const Sides& sides, Vertex x, Vertex y) {
    const VertexSet x1 = (g.adj(x) - g.adj(y)) & sides.a1;
    const VertexSet y1 = (g.adj(y) - g.adj(x)) & sides.a1;
    const VertexSet x2 = (g.adj(x) - g.adj(y)) & sides.a2;
    const VertexSet y2 = (g.adj(y) - g.adj(x)) & sides.a2;
    if (x1.empty() || y1.empty() || x2.empty() || y2.empty()) return std::nullopt;
    return Butterfly{x, y, x1.front(), y1.front(), x2.front(), y2.front()};
}

inline std::optional<Butterfly> first_butterfly(const Graph& g, const Sides& sides, const VertexSet& within) {
    for (Vertex x : within)
        for (Vertex y : within)
            if (x < y)
                if (auto b = as_butterfly(g, sides, x, y)) return b;
    return std::nullopt;
}

inline VertexSet butterfly_reach(const Graph& g, const Sides& sides, const Butterfly& b) {
    return (g.adj(b.x) | g.adj(b.y)) & (sides.a1 | sides.a2);
}

inline std::optional<Butterfly> minimal_butterfly(const Graph& g, const Sides& sides, const VertexSet& scc) {
    std::vector<std::pair<Butterfly, VertexSet>> all;
    for (Vertex x : scc)
        for (Vertex y : scc)
            if (x < y)
                if (auto b = as_butterfly(g, sides, x, y)) all.emplace_back(*b, butterfly_reach(g, sides, *b));
    for (const auto& [b, reach] : all) {
        bool minimal = true;
        for (const auto& other : all) {
            if (other.second != reach && other.second.is_subset_of(reach)) {
                minimal = false;
                break;
            }
        }
        if (minimal) return b;
    }
    return std::nullopt;
}

} // namespace covering_detail

/// Butterfly in scc whose set (A1 ∪ A2) ∩ N({x, y}) is inclusion-minimal;
/// the lexicographically first such pair (x, y).
inline std::optional<Butterfly> find_minimal_butterfly(const Graph& g, const SeparatorCertificate& cert,
                                                       const VertexSet& scc) {
    const auto sides = covering_detail::sides_of(g, cert);
    if (!scc.is_subset_of(sides.s)) throw input_error("find_minimal_butterfly: " + to_string(scc) + " not inside S");
    return covering_detail::minimal_butterfly(g, sides, scc);
}

/// Given two quasi-orders under which every pair of distinct items is
/// comparable in at least one, returns the first item x (in `items` order)
/// with x ≤1 y or x ≤2 y for all y. Throws invariant_violation naming an
/// incomparable pair if none exists.
template <class T, class Leq1, class Leq2>
T biranking_element(const std::vector<T>& items, Leq1&& leq1, Leq2&& leq2) {
    if (items.empty()) throw input_error("biranking_element: empty item list");
    for (const T& x : items) {
        bool ok = true;
        for (const T& y : items) {
            if (!(x == y) && !leq1(x, y) && !leq2(x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            const T& x = items[i];
            const T& y = items[j];
            if (!leq1(x, y) && !leq1(y, x) && !leq2(x, y) && !leq2(y, x)) {
                throw invariant_violation("biranking_element: items #" + std::to_string(i) + " and #" +
                                          std::to_string(j) + " are incomparable under both orders");
            }
        }
    }
    throw invariant_violation("biranking_element: no element qualifies although all pairs are comparable");
}

namespace covering_detail {

inline VertexSet cover_no_butterfly(const Graph& g, const Sides& sides, const VertexSet& t) {
    if (t.empty()) return {};
    if (auto b = first_butterfly(g, sides, t)) {
        throw invariant_violation("cover_no_butterfly: butterfly (" + std::to_string(b->x) + "," +
                                  std::to_string(b->y) + ") inside " + to_string(t));
    }
    auto leq = [&](const VertexSet& comp) {
        return [&g, comp](Vertex x, Vertex y) { return (g.adj(x) & comp).is_subset_of(g.adj(y) & comp); };
    };
    const Vertex x = biranking_element(t.to_vector(), leq(sides.a1), leq(sides.a2));
    const Vertex a1 = first_neighbor_in(g, x, sides.a1);
    const Vertex a2 = first_neighbor_in(g, x, sides.a2);
    if (!t.is_subset_of(g.adj(a1) | g.adj(a2))) {
        throw invariant_violation("cover_no_butterfly: {" + std::to_string(a1) + "," + std::to_string(a2) +
                                  "} does not dominate " + to_string(t));
    }
    return VertexSet{a1, a2};
}

} // namespace covering_detail

/// Two vertices a1 ∈ A1, a2 ∈ A2 dominating a butterfly-free t ⊆ S_cc
/// (empty when t is empty): the minimum-id neighbours of the bi-ranking
/// element of t.
inline VertexSet cover_no_butterfly(const Graph& g, const SeparatorCertificate& cert, const VertexSet& t) {
    const auto sides = covering_detail::sides_of(g, cert);
    if (!t.is_subset_of(sides.s)) throw input_error("cover_no_butterfly: " + to_string(t) + " not inside S");
    return covering_detail::cover_no_butterfly(g, sides, t);
}

// ---------------------------------------------------------------------------
// P7-free separators.

namespace covering_detail {

using PartialCover = std::variant<VertexSet, InducedPathWitness>;

// Cover of S_bc (b on side `bs`, c on the other side `cs`): a vertex v with
// inclusion-minimal A_cs ∩ N(v), a neighbour w of v in A_cs, and v's P4 into
// A_bs. Anything left undominated yields v'-w'-w-v-u1-u2-u3.
inline PartialCover cover_mixed(const Graph& g, const TypeClassification& b_side, const TypeClassification& c_side,
                                const VertexSet& targets) {
    if (targets.empty()) return VertexSet{};
    const VertexSet& ac = c_side.component;

    std::optional<Vertex> v;
    for (Vertex cand : targets) {
        const VertexSet mine = g.adj(cand) & ac;
        bool minimal = true;
        for (Vertex other : targets) {
            const VertexSet theirs = g.adj(other) & ac;
            if (theirs != mine && theirs.is_subset_of(mine)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            v = cand;
            break;
        }
    }
    if (!v) throw invariant_violation("cover_mixed: no inclusion-minimal neighbourhood");

    const Vertex w = first_neighbor_in(g, *v, ac);
    const auto& p4 = b_side.p4.at(*v).vertices;
    const VertexSet r{p4[1], p4[2], p4[3], *v, w};

    const VertexSet missed = targets - neighborhood(g, r, true);
    if (missed.empty()) return r;

    const Vertex vp = missed.front();
    const VertexSet wps = (g.adj(vp) - g.adj(*v)) & ac;
    if (wps.empty()) {
        throw invariant_violation("cover_mixed: A ∩ (N(" + std::to_string(vp) + ") ∖ N(" + std::to_string(*v) +
                                  ")) is empty despite minimal choice");
    }
    const Vertex wp = wps.front();
    if (!g.has_edge(w, wp)) {
        throw invariant_violation("cover_mixed: type-c difference sets not complete (" + std::to_string(w) + "," +
                                  std::to_string(wp) + ")");
    }
    return make_witness(g, {vp, wp, w, *v, p4[1], p4[2], p4[3]}, 7, "cover_mixed");
}

// Cover of S_cc, or the induced P7 produced when a butterfly survives
// outside the closed neighbourhood of a minimal butterfly.
inline PartialCover cover_double_c(const Graph& g, const Sides& sides, const TypeClassification& side1,
                                   const TypeClassification& side2, const VertexSet& scc) {
    if (scc.empty()) return VertexSet{};
    const auto b = minimal_butterfly(g, sides, scc);
    if (!b) return cover_no_butterfly(g, sides, scc);

    if (!g.has_edge(b->u1x, b->u1y) || !g.has_edge(b->u2x, b->u2y)) {
        throw invariant_violation("butterfly (" + std::to_string(b->x) + "," + std::to_string(b->y) +
                                  ") witnesses are not adjacent");
    }
    const VertexSet rp{b->x, b->y, b->u1x, b->u1y, b->u2x, b->u2y};
    const VertexSet t = scc - neighborhood(g, rp, true);

    if (auto inner = first_butterfly(g, sides, t)) {
        const VertexSet reach = (g.adj(inner->x) | g.adj(inner->y)) & (sides.a1 | sides.a2);
        const VertexSet fresh = reach - (g.adj(b->x) | g.adj(b->y));
        if (fresh.empty()) {
            throw invariant_violation("butterfly (" + std::to_string(b->x) + "," + std::to_string(b->y) +
                                      ") is not inclusion-minimal");
        }
        const Vertex w = fresh.front();
        const Vertex anchor = g.has_edge(w, inner->x) ? inner->x : inner->y;
        const bool in_first = sides.a1.contains(w);
        const Vertex near_x = in_first ? b->u1x : b->u2x;
        const Vertex far_x = in_first ? b->u2x : b->u1x;
        const Vertex far_y = in_first ? b->u2y : b->u1y;
        const Vertex far_p = in_first ? side2.p : side1.p;
        std::vector<Vertex> path = g.has_edge(b->x, b->y)
                                       ? std::vector<Vertex>{anchor, w, near_x, b->x, b->y, far_y, far_p}
                                       : std::vector<Vertex>{anchor, w, near_x, b->x, far_x, far_y, b->y};
        return make_witness(g, std::move(path), 7, "cover_double_c");
    }
    return rp | cover_no_butterfly(g, sides, t);
}

} // namespace covering_detail

/// Cover of a minimal separator of size at most 22 in a P7-free graph, as
/// R_a ∪ R_bc ∪ R_cb ∪ R_cc over the first two full components A1, A2; or an
/// induced P7 found where the construction would otherwise fail.
inline CoverOutcome cover_separator_p7(const Graph& g, const SeparatorCertificate& cert) {
    using namespace covering_detail;
    const auto sides = sides_of(g, cert);

    for (int side : {1, 2}) {
        if (sides.comp(side).size() == 1) {
            return {sides.s, make_cover(g, sides.s, sides.comp(side), {{"singleton", sides.comp(side)}},
                                        kSeparatorCoverBound)};
        }
    }

    const auto side1 = classify_types(g, cert, 1);
    const auto side2 = classify_types(g, cert, 2);
    auto both = [&](TypeLabel l1, TypeLabel l2) { return side1.of_type(l1) & side2.of_type(l2); };

    if (const VertexSet sbb = both(TypeLabel::b, TypeLabel::b); !sbb.empty()) {
        const Vertex x = sbb.front();
        const auto& left = side1.p4.at(x).vertices;
        const auto& right = side2.p4.at(x).vertices;
        return {sides.s, make_witness(g, {left[3], left[2], left[1], x, right[1], right[2], right[3]}, 7,
                                      "doubly type-b vertex")};
    }

    const VertexSet ra{side1.p, side1.q, side2.p, side2.q};

    auto rbc = cover_mixed(g, side1, side2, both(TypeLabel::b, TypeLabel::c));
    if (auto* w = std::get_if<InducedPathWitness>(&rbc)) return {sides.s, std::move(*w)};
    auto rcb = cover_mixed(g, side2, side1, both(TypeLabel::c, TypeLabel::b));
    if (auto* w = std::get_if<InducedPathWitness>(&rcb)) return {sides.s, std::move(*w)};
    auto rcc = cover_double_c(g, sides, side1, side2, both(TypeLabel::c, TypeLabel::c));
    if (auto* w = std::get_if<InducedPathWitness>(&rcc)) return {sides.s, std::move(*w)};

    const std::vector<NamedSet> parts{{"R_a", ra},
                                      {"R_bc", std::get<VertexSet>(rbc)},
                                      {"R_cb", std::get<VertexSet>(rcb)},
                                      {"R_cc", std::get<VertexSet>(rcc)}};
    const std::size_t budget[] = {4, 5, 5, 8};
    VertexSet all;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].members.size() > budget[i]) {
            throw invariant_violation(parts[i].name + " = " + to_string(parts[i].members) + " exceeds budget " +
                                      std::to_string(budget[i]));
        }
        all |= parts[i].members;
    }
    return {sides.s, make_cover(g, sides.s, all, parts, kSeparatorCoverBound)};
}

// ---------------------------------------------------------------------------
// P7-free potential maximal cliques.

struct ComponentCover {
    VertexSet omega_prime;            // at most 2 vertices of Ω
    std::vector<VertexSet> d_prime;   // at most 3 components of G - Ω
};

/// Ω ⊆ N[Ω'] ∪ ⋃ N(D) over D ∈ D', with |Ω'| ≤ 2 and |D'| ≤ 3; or an
/// induced P7 y_u - u - P_u - x - P_v - v - y_v (first seven vertices).
inline std::variant<ComponentCover, InducedPathWitness> cover_pmc_components(const Graph& g,
                                                                            const PmcCertificate& pcert) {
    validate_pmc_certificate(g, pcert);
    const VertexSet& omega = pcert.omega;
    const auto comps = components(g, omega);
    std::vector<VertexSet> nbhd;
    for (const auto& c : comps) nbhd.push_back(neighborhood(g, c));

    std::vector<Edge> nonedges;
    for (Vertex u : omega)
        for (Vertex v : omega - g.adj(u))
            if (v > u) nonedges.emplace_back(u, v);

    auto covers = [&](std::size_t i, Vertex u, Vertex v) { return nbhd[i].contains(u) && nbhd[i].contains(v); };

    // inclusion-minimal covering family by greedy removal in component order
    std::vector<std::size_t> family(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) family[i] = i;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<std::size_t> trial;
        for (auto j : family)
            if (j != i) trial.push_back(j);
        bool still = true;
        for (auto [u, v] : nonedges) {
            bool hit = false;
            for (auto j : trial) hit = hit || covers(j, u, v);
            if (!hit) {
                still = false;
                break;
            }
        }
        if (still) family = std::move(trial);
    }

    auto check = [&](ComponentCover cc) -> ComponentCover {
        VertexSet reach = neighborhood(g, cc.omega_prime, true);
        for (const auto& d : cc.d_prime) reach |= neighborhood(g, d);
        if (!omega.is_subset_of(reach) || cc.omega_prime.size() > 2 || cc.d_prime.size() > 3) {
            throw invariant_violation("cover_pmc_components: result does not cover " + to_string(omega));
        }
        return cc;
    };

    if (family.empty()) return check({VertexSet{omega.front()}, {}});

    const std::size_t d = family.front();
    std::optional<Edge> private_edge;
    for (auto [u, v] : nonedges) {
        if (!covers(d, u, v)) continue;
        bool shared = false;
        for (auto j : family) shared = shared || (j != d && covers(j, u, v));
        if (!shared) {
            private_edge = Edge{u, v};
            break;
        }
    }
    if (!private_edge) throw invariant_violation("cover_pmc_components: family is not inclusion-minimal");
    const auto [u, v] = *private_edge;

    auto first_touching = [&](Vertex z) -> std::optional<std::size_t> {
        for (auto j : family)
            if (j != d && nbhd[j].contains(z)) return j;
        return std::nullopt;
    };
    const auto du = first_touching(u);
    if (!du) return check({VertexSet{u}, {comps[d]}});
    const auto dv = first_touching(v);
    if (!dv) return check({VertexSet{v}, {comps[d]}});

    const VertexSet reach = neighborhood(g, VertexSet{u, v}, true) | nbhd[d] | nbhd[*du] | nbhd[*dv];
    const VertexSet missed = omega - reach;
    if (missed.empty()) return check({VertexSet{u, v}, {comps[d], comps[*du], comps[*dv]}});

    const Vertex x = missed.front();
    auto first_covering = [&](Vertex a, Vertex b) {
        for (auto j : family)
            if (covers(j, a, b)) return j;
        throw invariant_violation("cover_pmc_components: non-edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " uncovered by the family");
    };
    const std::size_t dxu = first_covering(std::min(x, u), std::max(x, u));
    const std::size_t dxv = first_covering(std::min(x, v), std::max(x, v));
    const Vertex yu = first_neighbor_in(g, u, comps[*du]);
    const Vertex yv = first_neighbor_in(g, v, comps[*dv]);
    const auto pu = shortest_path_through(g, u, x, comps[dxu]);
    auto pv = shortest_path_through(g, v, x, comps[dxv]);
    std::reverse(pv.begin(), pv.end());

    std::vector<Vertex> path{yu};
    path.insert(path.end(), pu.begin(), pu.end());
    path.insert(path.end(), pv.begin() + 1, pv.end());
    path.push_back(yv);
    if (path.size() < 7 || !is_induced_path(g, path)) {
        throw invariant_violation("cover_pmc_components: assembled path " + to_string(InducedPathWitness{path}) +
                                  " is not an induced path on at least 7 vertices");
    }
    path.resize(7);
    return covering_detail::make_witness(g, std::move(path), 7, "cover_pmc_components");
}

/// Cover of a PMC of size at most 68 in a P7-free graph: Ω' plus a separator
/// cover of N(D) for every D in D'. Witnesses from any step propagate.
inline CoverOutcome cover_pmc_p7(const Graph& g, const PmcCertificate& pcert) {
    auto first = cover_pmc_components(g, pcert);
    if (auto* w = std::get_if<InducedPathWitness>(&first)) return {pcert.omega, std::move(*w)};
    const auto& cc = std::get<ComponentCover>(first);

    std::vector<NamedSet> parts{{"omega_prime", cc.omega_prime}};
    VertexSet all = cc.omega_prime;
    for (const auto& d : cc.d_prime) {
        const auto sep = nd_separator(g, pcert, d);
        auto sub = cover_separator_p7(g, sep);
        if (!sub.has_cover()) return {pcert.omega, sub.witness()};
        parts.push_back({"component_cover " + to_string(d), sub.cover().vertices});
        all |= sub.cover().vertices;
    }
    return {pcert.omega, covering_detail::make_cover(g, pcert.omega, all, std::move(parts), kPmcCoverBound)};
}

} // namespace p7cover
