#pragma once

// Batch verifier: runs the covering property suite over a seeded random
// P7-free corpus plus exhaustive small connected graphs.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "covering.hpp"
#include "graph_io.hpp"
#include "oracle.hpp"
#include "pmc.hpp"
#include "separators.hpp"

namespace p7cover {

struct VerifyConfig {
    std::size_t samples = 200;
    std::size_t n_min = 7;
    std::size_t n_max = 12;
    std::uint64_t seed = 1;
    std::size_t exhaustive_max_n = 5;     // connected labelled graphs on 1..this many vertices
    std::size_t separator_oracle_max_n = kBruteSeparatorMaxVertices;
    std::size_t pmc_max_n = 14;           // PMC subset scan is skipped above this
    std::size_t domination_pool_max = 24; // min-dominating-set oracle is skipped above this
    std::size_t workers = 0;              // 0: P7COVER_WORKERS or hardware concurrency
};

struct Violation {
    std::string graph; // graph6
    std::string object;
    std::string property;

    friend bool operator<(const Violation& a, const Violation& b) {
        return std::tie(a.graph, a.object, a.property) < std::tie(b.graph, b.object, b.property);
    }
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    std::size_t instances = 0;
    std::size_t separators = 0;
    std::size_t pmcs = 0;
    std::size_t max_separator_cover = 0;
    std::size_t max_pmc_cover = 0;
    std::size_t max_min_domination = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Random P7-free graph for corpus slot `index`: n and edge probability are
/// drawn from a generator seeded by (seed, index) so slots are independent.
inline Graph corpus_graph(std::uint64_t seed, std::size_t index, std::size_t n_min, std::size_t n_max) {
    std::mt19937_64 rng(seed * 0x100000001b3ULL + index);
    const std::size_t n = n_min + static_cast<std::size_t>(rng() % (n_max - n_min + 1));
    const double p = 0.15 + 0.45 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return random_ptfree(n, 7, p, rng());
}

/// Checks every separator and PMC of one P7-free graph, appending to `out`.
inline void verify_instance(const Graph& g, const VerifyConfig& cfg, VerifyReport& out) {
    const std::string tag = to_graph6(g);
    auto fail = [&](const std::string& object, const std::string& what) { out.violations.push_back({tag, object, what}); };
    ++out.instances;
    try {
        const auto seps = enumerate_minimal_separators(g);
        if (g.n() <= cfg.separator_oracle_max_n) {
            std::vector<VertexSet> listed;
            for (const auto& c : seps) listed.push_back(c.s);
            if (listed != brute_minimal_separators(g, cfg.separator_oracle_max_n)) {
                fail("graph", "separator enumeration differs from brute force");
            }
        }
        for (const auto& cert : seps) {
            ++out.separators;
            const std::string obj = "separator " + to_string(cert.s);
            for (const auto& a : cert.full_components)
                if (neighborhood(g, a) != cert.s) fail(obj, "full component neighbourhood differs from S");
            const auto outcome = cover_separator_p7(g, cert);
            if (!outcome.has_cover()) {
                fail(obj, "witness " + to_string(outcome.witness()) + " returned on a P7-free graph");
                continue;
            }
            const auto& c = outcome.cover();
            if (!validates_as_cover(g, cert.s, c)) fail(obj, "cover does not validate");
            out.max_separator_cover = std::max(out.max_separator_cover, c.vertices.size());
            const char* names[] = {"R_a", "R_bc", "R_cb", "R_cc"};
            const std::size_t budget[] = {4, 5, 5, 8};
            for (std::size_t i = 0; i < 4; ++i)
                if (const auto* part = c.part(names[i]); part && part->size() > budget[i])
                    fail(obj, std::string(names[i]) + " over budget");
            if (g.n() <= cfg.domination_pool_max) {
                const auto best = min_dominating_set_of(g, cert.s, g.vertices(), cfg.domination_pool_max);
                out.max_min_domination = std::max(out.max_min_domination, best.size());
                if (best.size() > c.vertices.size() || best.size() > kSeparatorCoverBound)
                    fail(obj, "oracle minimum exceeds returned cover");
            }
        }
        if (g.n() <= cfg.pmc_max_n) {
            const auto pmcs = enumerate_pmcs(g, cfg.pmc_max_n);
            for (const auto& sep : seps) {
                const bool inside = std::any_of(pmcs.begin(), pmcs.end(),
                                                [&](const PmcCertificate& p) { return sep.s.is_subset_of(p.omega); });
                if (!inside) fail("separator " + to_string(sep.s), "not contained in any PMC");
            }
            for (const auto& p : pmcs) {
                ++out.pmcs;
                const std::string obj = "pmc " + to_string(p.omega);
                for (const auto& d : components(g, p.omega)) nd_separator(g, p, d);
                const auto parts = cover_pmc_components(g, p);
                if (!std::holds_alternative<ComponentCover>(parts)) {
                    fail(obj, "component cover returned a witness on a P7-free graph");
                    continue;
                }
                const auto outcome = cover_pmc_p7(g, p);
                if (!outcome.has_cover()) {
                    fail(obj, "witness returned on a P7-free graph");
                    continue;
                }
                if (!validates_as_cover(g, p.omega, outcome.cover())) fail(obj, "cover does not validate");
                out.max_pmc_cover = std::max(out.max_pmc_cover, outcome.cover().vertices.size());
            }
        }
    } catch (const std::exception& e) {
        fail("graph", std::string("exception: ") + e.what());
    }
}

inline std::size_t worker_count(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("P7COVER_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Builds the corpus, checks every instance on a worker pool and merges the
/// per-instance reports in corpus order.
inline VerifyReport run_verify(const VerifyConfig& cfg) {
    if (cfg.n_min == 0 || cfg.n_min > cfg.n_max) throw input_error("verify: need 1 <= n-min <= n-max");
    std::vector<Graph> corpus;
    for (std::size_t n = 1; n <= cfg.exhaustive_max_n; ++n) {
        for_each_labeled_graph(n, true, [&](const Graph& g) {
            if (is_pt_free(g, 7)) corpus.push_back(g);
        });
    }
    for (std::size_t i = 0; i < cfg.samples; ++i) corpus.push_back(corpus_graph(cfg.seed, i, cfg.n_min, cfg.n_max));

    std::vector<VerifyReport> partial(corpus.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) verify_instance(corpus[i], cfg, partial[i]);
    };
    const std::size_t workers = std::min(worker_count(cfg.workers), std::max<std::size_t>(corpus.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    VerifyReport total;
    for (const auto& r : partial) {
        total.instances += r.instances;
        total.separators += r.separators;
        total.pmcs += r.pmcs;
        total.max_separator_cover = std::max(total.max_separator_cover, r.max_separator_cover);
        total.max_pmc_cover = std::max(total.max_pmc_cover, r.max_pmc_cover);
        total.max_min_domination = std::max(total.max_min_domination, r.max_min_domination);
        total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
    }
    std::sort(total.violations.begin(), total.violations.end());
    return total;
}

} // namespace p7cover
