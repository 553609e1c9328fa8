#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace p7cover {

namespace io_detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool parse_uint(std::string_view tok, std::size_t& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace io_detail

// Edge-list text: one "u v" pair per line, 0-indexed; blank lines and '#'
// comments are ignored. The vertex count is max id + 1, unless a
// "# vertices N" comment raises it (the emitter writes one so isolated
// trailing vertices survive a round trip).
inline Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            const auto toks = io_detail::split_ws(line.substr(hash + 1));
            std::size_t declared = 0;
            if (toks.size() == 2 && toks[0] == "vertices" && io_detail::parse_uint(toks[1], declared)) {
                n = std::max(n, declared);
            }
            line = line.substr(0, hash);
        }
        line = io_detail::trim(line);
        if (line.empty()) continue;

        const auto toks = io_detail::split_ws(line);
        std::size_t u = 0, v = 0;
        if (toks.size() != 2 || !io_detail::parse_uint(toks[0], u) || !io_detail::parse_uint(toks[1], v)) {
            throw input_error("edge list line " + std::to_string(line_no) + ": expected 'u v', got '" +
                              std::string(line) + "'");
        }
        if (u >= kMaxVertices || v >= kMaxVertices) {
            throw capacity_error("edge list line " + std::to_string(line_no) + ": vertex id exceeds capacity " +
                                 std::to_string(kMaxVertices));
        }
        n = std::max({n, u + 1, v + 1});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = "# vertices " + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Standard graph6 (printable bytes 63..126, six bits per byte, upper
/// triangle in column order). An optional ">>graph6<<" header is skipped.
inline Graph parse_graph6(std::string_view text) {
    text = io_detail::trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw input_error("graph6: empty input");

    std::size_t pos = 0;
    auto next6 = [&](const char* what) -> unsigned {
        if (pos >= text.size()) throw input_error(std::string("graph6: truncated ") + what);
        const auto c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw input_error("graph6: byte " + std::to_string(c) + " outside 63..126");
        return c - 63U;
    };

    std::size_t n = 0;
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = next6("size");
    } else {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            for (int i = 0; i < 6; ++i) n = (n << 6) | next6("size");
        } else {
            for (int i = 0; i < 3; ++i) n = (n << 6) | next6("size");
        }
    }
    if (n > kMaxVertices) {
        throw capacity_error("graph6: " + std::to_string(n) + " vertices exceeds capacity " +
                             std::to_string(kMaxVertices));
    }

    std::vector<Edge> edges;
    unsigned chunk = 0;
    int left = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (left == 0) {
                chunk = next6("adjacency");
                left = 6;
            }
            --left;
            if ((chunk >> left) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (pos != text.size()) throw input_error("graph6: trailing bytes after adjacency data");
    return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
    std::string out;
    const std::size_t n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    unsigned chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

/// Heuristic: a single non-comment token of printable graph6 bytes.
inline bool looks_like_graph6(std::string_view text) {
    text = io_detail::trim(text);
    if (text.empty() || text.front() == '#') return false;
    if (text.substr(0, 10) == ">>graph6<<") return true;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) return false;
    }
    return true;
}

inline Graph parse_graph_text(std::string_view text) {
    return looks_like_graph6(text) ? parse_graph6(text) : parse_edge_list(text);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

} // namespace p7cover
