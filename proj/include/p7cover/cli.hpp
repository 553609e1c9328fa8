#pragma once

// Command-line front end. `run` takes the argument list (without the
// program name) and streams, so tests can drive it in-process.
//
// Exit status: 0 success / cover produced, 1 witness found or verdict
// negative, 2 input error, 3 internal invariant violation.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covering.hpp"
#include "families.hpp"
#include "graph_io.hpp"
#include "induced_paths.hpp"
#include "oracle.hpp"
#include "pmc.hpp"
#include "separators.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace p7cover::cli {

enum Status : int { kOk = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

/// Reads a graph from a path, "-" for stdin, or the pseudo-path
/// "family:V:N" naming a built-in example instance.
inline Graph load_graph(const std::string& source, std::istream& in) {
    if (source.rfind("family:", 0) == 0) {
        const std::string rest = source.substr(7);
        const auto colon = rest.find(':');
        std::size_t variant = 0, n = 0;
        if (colon == std::string::npos || !io_detail::parse_uint(rest.substr(0, colon), variant) ||
            !io_detail::parse_uint(rest.substr(colon + 1), n)) {
            throw input_error("malformed family source '" + source + "', expected family:V:N");
        }
        return build_example(static_cast<int>(variant), n).graph;
    }
    if (source == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_graph_text(buf.str());
    }
    return read_graph_file(source);
}

/// "0,2,5" -> {0, 2, 5}; whitespace tolerated, empty string is the empty set.
inline VertexSet parse_list(const std::string& text) {
    VertexSet out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto tok = io_detail::trim(rest.substr(0, comma));
        std::size_t v = 0;
        if (!io_detail::parse_uint(tok, v)) throw input_error("bad vertex list '" + text + "'");
        if (v >= kMaxVertices) throw input_error("vertex " + std::to_string(v) + " out of range in '" + text + "'");
        out.insert(static_cast<Vertex>(v));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return out;
}

struct Result {
    Json json;
    std::string text;
    int status = kOk;
};

namespace detail {

inline Json header(const std::string& command) { return Json{{"schema", kJsonSchema}, {"command", command}}; }

inline std::string path_text(const InducedPathWitness& w) { return to_string(w); }

inline Result ptfree(const Graph& g, std::size_t t) {
    if (t == 0) throw input_error("--t must be positive");
    const auto w = find_induced_pt(g, t);
    const std::string summary = "P" + std::to_string(t) + "-free: " + (w ? "no" : "yes");
    Result r{header("ptfree"), summary + "\n", w ? kNegative : kOk};
    r.json["n"] = g.n();
    r.json["t"] = t;
    r.json["free"] = !w;
    r.json["witness"] = w ? to_json(*w) : Json(nullptr);
    r.json["summary"] = summary;
    if (w) r.text += "witness: " + path_text(*w) + "\n";
    return r;
}

inline Result sep_enum(const Graph& g, bool oracle) {
    std::vector<SeparatorCertificate> seps;
    if (oracle) {
        for (const auto& s : brute_minimal_separators(g)) seps.push_back(full_components(g, s));
    } else {
        seps = enumerate_minimal_separators(g);
    }
    Result r{header("sep enum"), {}, kOk};
    r.json["method"] = oracle ? "subset-scan" : "seed-and-expand";
    Json list = Json::array();
    for (const auto& c : seps) {
        list.push_back(to_json(c));
        r.text += to_string(c.s) + "  full:";
        for (const auto& f : c.full_components) r.text += " " + to_string(f);
        r.text += "\n";
    }
    r.json["n"] = g.n();
    r.json["count"] = seps.size();
    r.json["separators"] = std::move(list);
    r.text = std::to_string(seps.size()) + " minimal separators\n" + r.text;
    return r;
}

inline Result sep_cover(const Graph& g, std::size_t t, const std::optional<VertexSet>& only) {
    if (t < 5 || t > 8) throw input_error("--t must be one of 5, 6, 7, 8");
    if (t == 8) throw input_error("no constant-size separator cover exists for P8-free graphs; use --t 5, 6 or 7");

    std::vector<SeparatorCertificate> certs;
    if (only) {
        auto c = full_components(g, *only);
        validate_separator_certificate(g, c);
        certs.push_back(std::move(c));
    } else {
        certs = enumerate_minimal_separators(g);
    }

    Result r{header("sep cover"), {}, kOk};
    r.json["t"] = t;
    r.json["bound"] = t == 5 ? 2 : t == 6 ? 6 : kSeparatorCoverBound;
    Json results = Json::array();
    std::size_t witnesses = 0;
    for (const auto& cert : certs) {
        Json entry{{"separator", to_json(cert.s)}};
        if (t == 6) {
            if (auto sc = cover_separator_p6_search(g, cert)) {
                const VertexSet all = sc->a_prime | sc->b_prime;
                entry["outcome"] = "cover";
                entry["a_prime"] = to_json(sc->a_prime);
                entry["b_prime"] = to_json(sc->b_prime);
                entry["cover"] = to_json(all);
                entry["size"] = all.size();
                r.text += to_string(cert.s) + "  cover " + to_string(sc->a_prime) + " + " + to_string(sc->b_prime) + "\n";
            } else {
                ++witnesses;
                entry["outcome"] = "absent";
                const auto w = find_induced_pt(g, 6);
                entry["witness"] = w ? to_json(*w) : Json(nullptr);
                r.text += to_string(cert.s) + "  no 3+3 cover" + (w ? "; induced P6 " + path_text(*w) : "") + "\n";
            }
        } else {
            const auto outcome = t == 5 ? cover_separator_p5(g, cert) : cover_separator_p7(g, cert);
            entry.update(to_json(outcome));
            if (outcome.has_cover()) {
                r.text += to_string(cert.s) + "  cover " + to_string(outcome.cover().vertices) + " size " +
                          std::to_string(outcome.cover().vertices.size()) + "\n";
            } else {
                ++witnesses;
                r.text += to_string(cert.s) + "  witness P" + std::to_string(outcome.witness().size()) + " " +
                          path_text(outcome.witness()) + "\n";
            }
        }
        results.push_back(std::move(entry));
    }
    r.json["results"] = std::move(results);
    r.json["witnesses"] = witnesses;
    r.status = witnesses ? kNegative : kOk;
    return r;
}

inline Result pmc_enum(const Graph& g) {
    const auto pmcs = enumerate_pmcs(g);
    Result r{header("pmc enum"), std::to_string(pmcs.size()) + " potential maximal cliques\n", kOk};
    Json list = Json::array();
    for (const auto& p : pmcs) {
        list.push_back(to_json(p));
        r.text += to_string(p.omega) + "\n";
    }
    r.json["n"] = g.n();
    r.json["count"] = pmcs.size();
    r.json["pmcs"] = std::move(list);
    return r;
}

inline Result pmc_check(const Graph& g, const VertexSet& omega) {
    const auto verdict = check_pmc(g, omega);
    Result r{header("pmc check"), {}, verdict.certificate ? kOk : kNegative};
    r.json["omega"] = to_json(omega);
    r.json["is_pmc"] = verdict.certificate.has_value();
    if (verdict.certificate) {
        r.json["certificate"] = to_json(*verdict.certificate);
        r.text = to_string(omega) + " is a PMC\n";
    } else {
        r.json["violation"] = verdict.violation;
        r.text = to_string(omega) + " is not a PMC (" + verdict.violation + ")\n";
    }
    return r;
}

inline Result pmc_cover(const Graph& g, const std::optional<VertexSet>& only) {
    std::vector<PmcCertificate> certs;
    if (only) {
        const auto verdict = check_pmc(g, *only);
        if (!verdict.certificate) throw input_error(to_string(*only) + " is not a PMC: " + verdict.violation);
        certs.push_back(*verdict.certificate);
    } else {
        certs = enumerate_pmcs(g);
    }
    Result r{header("pmc cover"), {}, kOk};
    r.json["bound"] = kPmcCoverBound;
    Json results = Json::array();
    std::size_t witnesses = 0;
    for (const auto& p : certs) {
        Json entry{{"omega", to_json(p.omega)}};
        const auto parts = cover_pmc_components(g, p);
        if (const auto* cc = std::get_if<ComponentCover>(&parts)) {
            entry["omega_prime"] = to_json(cc->omega_prime);
            entry["d_prime"] = to_json(cc->d_prime);
        }
        const auto outcome = cover_pmc_p7(g, p);
        entry.update(to_json(outcome));
        if (outcome.has_cover()) {
            r.text += to_string(p.omega) + "  cover " + to_string(outcome.cover().vertices) + " size " +
                      std::to_string(outcome.cover().vertices.size()) + "\n";
        } else {
            ++witnesses;
            r.text += to_string(p.omega) + "  witness P7 " + path_text(outcome.witness()) + "\n";
        }
        results.push_back(std::move(entry));
    }
    r.json["results"] = std::move(results);
    r.json["witnesses"] = witnesses;
    r.status = witnesses ? kNegative : kOk;
    return r;
}

inline Result family(int variant, std::size_t n, const std::string& emit, const std::string& sidecar) {
    const auto fi = build_example(variant, n);
    Result r{header("family"), {}, kOk};
    r.json.update(to_json(fi));
    if (!sidecar.empty()) {
        std::ofstream side(sidecar);
        if (!side) throw input_error("cannot write sidecar '" + sidecar + "'");
        side << r.json.dump(2) << "\n";
    }
    if (emit == "edgelist") {
        r.text = to_edge_list(fi.graph);
    } else if (emit == "graph6") {
        r.text = to_graph6(fi.graph) + "\n";
    } else {
        r.text = "variant " + std::to_string(variant) + ", n=" + std::to_string(n) + ", " +
                 std::to_string(fi.graph.n()) + " vertices, " + std::to_string(fi.graph.edge_count()) + " edges\n" +
                 "S  = " + to_string(fi.s) + "\nA1 = " + to_string(fi.a1) + "\nA2 = " + to_string(fi.a2) + "\n";
    }
    return r;
}

inline Result verify(const VerifyConfig& cfg) {
    const auto report = run_verify(cfg);
    Result r{header("verify"), {}, report.ok() ? kOk : kNegative};
    r.json["config"] = Json{{"samples", cfg.samples},
                            {"n_min", cfg.n_min},
                            {"n_max", cfg.n_max},
                            {"seed", cfg.seed},
                            {"exhaustive_max_n", cfg.exhaustive_max_n},
                            {"separator_oracle_max_n", cfg.separator_oracle_max_n},
                            {"pmc_max_n", cfg.pmc_max_n},
                            {"domination_pool_max", cfg.domination_pool_max}};
    r.json["report"] = to_json(report);
    std::ostringstream t;
    t << "instances            " << report.instances << "\n"
      << "separators           " << report.separators << "\n"
      << "pmcs                 " << report.pmcs << "\n"
      << "max separator cover  " << report.max_separator_cover << " (bound " << kSeparatorCoverBound << ")\n"
      << "max pmc cover        " << report.max_pmc_cover << " (bound " << kPmcCoverBound << ")\n"
      << "max min domination   " << report.max_min_domination << "\n"
      << "violations           " << report.violations.size() << "\n";
    for (const auto& v : report.violations) t << "  " << v.graph << "  " << v.object << ": " << v.property << "\n";
    r.text = t.str();
    return r;
}

} // namespace detail

/// Oracle thresholds for verify, overridable through P7COVER_SEPARATOR_ORACLE_MAX,
/// P7COVER_PMC_MAX and P7COVER_DOMINATION_POOL_MAX (worker count is read
/// later from P7COVER_WORKERS).
inline VerifyConfig config_from_env(VerifyConfig cfg) {
    auto read = [](const char* name, std::size_t& slot) {
        const char* env = std::getenv(name);
        if (!env) return;
        std::size_t v = 0;
        if (!io_detail::parse_uint(env, v)) throw input_error(std::string(name) + " must be a non-negative integer");
        slot = v;
    };
    read("P7COVER_SEPARATOR_ORACLE_MAX", cfg.separator_oracle_max_n);
    read("P7COVER_PMC_MAX", cfg.pmc_max_n);
    read("P7COVER_DOMINATION_POOL_MAX", cfg.domination_pool_max);
    cfg.separator_oracle_max_n = std::min(cfg.separator_oracle_max_n, kBruteSeparatorMaxVertices);
    cfg.pmc_max_n = std::min(cfg.pmc_max_n, kPmcScanMaxVertices);
    cfg.domination_pool_max = std::min(cfg.domination_pool_max, kDominationPoolLimit);
    return cfg;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    CLI::App app{"Certified separator and PMC covers in P7-free graphs", "p7cover"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string graph_src;
    std::size_t t = 7;
    std::string list;

    auto* ptfree = app.add_subcommand("ptfree", "Test P_t-freeness, printing a witness if any");
    ptfree->add_option("--t", t, "Path length")->required();
    ptfree->add_option("graph", graph_src, "Edge-list/graph6 file, '-' or family:V:N")->required();

    auto* sep = app.add_subcommand("sep", "Minimal separators");
    sep->require_subcommand(1);
    auto* sep_enum = sep->add_subcommand("enum", "List all minimal separators with certificates");
    bool use_oracle = false;
    sep_enum->add_flag("--oracle", use_oracle, "Use the 2^n subset scan (n <= 12)");
    sep_enum->add_option("graph", graph_src)->required();
    auto* sep_cover = sep->add_subcommand("cover", "Cover minimal separators");
    sep_cover->add_option("--t", t, "5, 6 or 7 (default 7)");
    auto* sep_opt = sep_cover->add_option("--sep", list, "Comma-separated separator; default: all");
    sep_cover->add_option("graph", graph_src)->required();

    auto* pmc = app.add_subcommand("pmc", "Potential maximal cliques");
    pmc->require_subcommand(1);
    auto* pmc_enum = pmc->add_subcommand("enum", "List all PMCs (subset scan)");
    pmc_enum->add_option("graph", graph_src)->required();
    auto* pmc_check = pmc->add_subcommand("check", "Check one set");
    pmc_check->add_option("--omega", list, "Comma-separated vertex set")->required();
    pmc_check->add_option("graph", graph_src)->required();
    auto* pmc_cover = pmc->add_subcommand("cover", "Cover PMCs");
    auto* omega_opt = pmc_cover->add_option("--omega", list, "Comma-separated PMC; default: all");
    pmc_cover->add_option("graph", graph_src)->required();

    int variant = 1;
    std::size_t fam_n = 1;
    std::string emit, sidecar;
    auto* fam = app.add_subcommand("family", "Build an example family instance");
    fam->add_option("--variant", variant)->required()->check(CLI::IsMember({1, 2}));
    fam->add_option("--n", fam_n)->required()->check(CLI::PositiveNumber);
    fam->add_option("--emit", emit, "Print the graph as edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    fam->add_option("--sidecar", sidecar, "Write the JSON metadata to this path");

    VerifyConfig vcfg;
    auto* ver = app.add_subcommand("verify", "Run the property suite over a seeded corpus");
    ver->add_option("--samples", vcfg.samples);
    ver->add_option("--n-min", vcfg.n_min);
    ver->add_option("--n-max", vcfg.n_max);
    ver->add_option("--seed", vcfg.seed);
    ver->add_option("--exhaustive-max", vcfg.exhaustive_max_n);
    ver->add_option("--workers", vcfg.workers);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Result result;
    try {
        if (*ptfree) {
            result = detail::ptfree(load_graph(graph_src, in), t);
        } else if (*sep_enum) {
            result = detail::sep_enum(load_graph(graph_src, in), use_oracle);
        } else if (*sep_cover) {
            std::optional<VertexSet> only;
            if (*sep_opt) only = parse_list(list);
            result = detail::sep_cover(load_graph(graph_src, in), t, only);
        } else if (*pmc_enum) {
            result = detail::pmc_enum(load_graph(graph_src, in));
        } else if (*pmc_check) {
            result = detail::pmc_check(load_graph(graph_src, in), parse_list(list));
        } else if (*pmc_cover) {
            std::optional<VertexSet> only;
            if (*omega_opt) only = parse_list(list);
            result = detail::pmc_cover(load_graph(graph_src, in), only);
        } else if (*fam) {
            result = detail::family(variant, fam_n, emit, sidecar);
            if (!emit.empty()) format = "text";
        } else if (*ver) {
            result = detail::verify(config_from_env(vcfg));
        }
    } catch (const invariant_violation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (format == "json") {
        out << result.json.dump(2) << "\n";
    } else {
        out << result.text;
    }
    return result.status;
}

} // namespace p7cover::cli
