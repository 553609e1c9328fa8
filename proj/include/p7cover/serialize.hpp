#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "covering.hpp"
#include "families.hpp"
#include "graph_io.hpp"
#include "induced_paths.hpp"
#include "pmc.hpp"
#include "separators.hpp"
#include "verify.hpp"

namespace p7cover {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

inline Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

inline Json to_json(const std::vector<VertexSet>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) out.push_back(to_json(s));
    return out;
}

inline Json to_json(const InducedPathWitness& w) { return Json(w.vertices); }

inline Json to_json(const SeparatorCertificate& c) {
    return Json{{"s", to_json(c.s)},
                {"full_components", to_json(c.full_components)},
                {"other_components", to_json(c.other_components)}};
}

inline Json to_json(const PmcCertificate& c) {
    Json cover = Json::array();
    for (const auto& e : c.nonedge_cover) {
        cover.push_back(Json{{"nonedge", {e.u, e.v}}, {"component", to_json(e.component)}});
    }
    return Json{{"omega", to_json(c.omega)}, {"nonedge_cover", std::move(cover)}};
}

inline Json to_json(const CoverOutcome& o) {
    Json j{{"target", to_json(o.target)}};
    if (o.has_cover()) {
        const auto& c = o.cover();
        j["outcome"] = "cover";
        j["cover"] = to_json(c.vertices);
        j["size"] = c.vertices.size();
        j["bound"] = c.bound;
        Json parts = Json::object();
        for (const auto& ns : c.breakdown) parts[ns.name] = to_json(ns.members);
        j["breakdown"] = std::move(parts);
        Json dom = Json::array();
        for (auto [t, d] : c.dominators) dom.push_back({t, d});
        j["dominators"] = std::move(dom);
    } else {
        j["outcome"] = "witness";
        j["witness"] = to_json(o.witness());
        j["path_length"] = o.witness().size();
    }
    return j;
}

inline Json to_json(const FamilyInstance& fi) {
    return Json{{"variant", fi.variant},
                {"n", fi.n},
                {"vertices", fi.graph.n()},
                {"graph6", to_graph6(fi.graph)},
                {"s", to_json(fi.s)},
                {"a1", to_json(fi.a1)},
                {"a2", to_json(fi.a2)},
                {"labels", fi.labels}};
}

inline Json to_json(const VerifyReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(Json{{"graph", x.graph}, {"object", x.object}, {"property", x.property}});
    return Json{{"instances", r.instances},
                {"separators", r.separators},
                {"pmcs", r.pmcs},
                {"max_separator_cover", r.max_separator_cover},
                {"max_pmc_cover", r.max_pmc_cover},
                {"max_min_domination", r.max_min_domination},
                {"violations", std::move(v)}};
}

inline VertexSet vertex_set_from_json(const Json& j) {
    VertexSet s;
    for (const auto& v : j) s.insert(v.get<Vertex>());
    return s;
}

} // namespace p7cover
