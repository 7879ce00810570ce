#pragma once

// Signed edge-list text format (".sg").
//
//   # comment
//   n 4
//   0 1 +
//   1 2 -1
//
// The first non-comment line is `n <count>`; each further line is `u v s`
// with s one of + - 1 -1. A ';' acts as a line break, so a whole graph fits
// on one line ("n 3; 0 1 +; 1 2 -"), which is how reports embed graphs.

#include <sgspec/signed_graph.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace sgspec {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

inline bool parse_int(std::string_view tok, long long& out) {
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

[[noreturn]] inline void parse_fail(int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace detail

inline Sign parse_sign_token(std::string_view tok, int line) {
    if (tok == "+" || tok == "1" || tok == "+1") return Sign::plus;
    if (tok == "-" || tok == "-1") return Sign::minus;
    detail::parse_fail(line, "bad sign token '" + std::string(tok) + "'");
}

inline SignedGraph parse_sg(std::string_view text) {
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::size_t seg_start = 0;
        while (seg_start <= line.size()) {
            auto semi = line.find(';', seg_start);
            if (semi == std::string_view::npos) semi = line.size();
            const auto segment = detail::trim(line.substr(seg_start, semi - seg_start));
            seg_start = semi + 1;
            if (segment.empty()) continue;

            const auto tok = detail::tokens(segment);
            if (n < 0) {
                if (tok.size() != 2 || tok[0] != "n")
                    detail::parse_fail(line_no, "expected header 'n <count>'");
                if (!detail::parse_int(tok[1], n) || n < 0 || n > 1'000'000)
                    detail::parse_fail(line_no, "bad vertex count '" + std::string(tok[1]) + "'");
                continue;
            }
            if (tok.size() != 3) detail::parse_fail(line_no, "expected 'u v s'");
            long long u = 0, v = 0;
            if (!detail::parse_int(tok[0], u)) detail::parse_fail(line_no, "bad vertex '" + std::string(tok[0]) + "'");
            if (!detail::parse_int(tok[1], v)) detail::parse_fail(line_no, "bad vertex '" + std::string(tok[1]) + "'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                detail::parse_fail(line_no, "vertex out of range 0.." + std::to_string(n - 1));
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), parse_sign_token(tok[2], line_no)});
        }
        if (nl == text.size()) break;
    }
    if (n < 0) throw Error(ErrorKind::ParseError, "missing header 'n <count>'");
    return SignedGraph(static_cast<int>(n), edges);
}

inline SignedGraph parse_sg(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sg(buf.str());
}

inline SignedGraph read_sg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return parse_sg(in);
}

// Canonical multi-line form: header, then edges in lexicographic order.
inline std::string to_sg(const SignedGraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + to_char(e.sign) + '\n';
    }
    return out;
}

// Single-line form, e.g. "n 3; 0 1 +; 1 2 -".
inline std::string to_edge_list_string(const SignedGraph& g) {
    std::string out = "n " + std::to_string(g.order());
    for (const auto& e : g.edges()) {
        out += "; " + std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + to_char(e.sign);
    }
    return out;
}

inline void write_sg_file(const std::string& path, const SignedGraph& g) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << to_sg(g);
}

} // namespace sgspec
