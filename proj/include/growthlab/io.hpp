#pragma once

// Text formats:
//   graph     "v=<n>" then "u w" edge lines and optional "color u c" lines
//   class     optional "mode=generators|forbidden", then graphs separated by "---"
//   relation  "a=<size> r=<arity>" then one whitespace-separated tuple per line
//   b-file    OEIS "n a(n)" lines, "#" comments
// Blank lines and "#" comments are ignored everywhere. Errors name the line.

#include "growthlab/graph.hpp"
#include "growthlab/numeric.hpp"
#include "growthlab/seq_core.hpp"
#include "growthlab/witness.hpp"

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace growthlab::io {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

struct Line {
    std::size_t number;
    std::string text;
};

inline std::string strip(const std::string& s) {
    auto hash = s.find('#');
    std::string t = hash == std::string::npos ? s : s.substr(0, hash);
    const auto b = t.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = t.find_last_not_of(" \t\r");
    return t.substr(b, e - b + 1);
}

inline std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string s = strip(raw);
        if (!s.empty()) out.push_back({no, std::move(s)});
    }
    return out;
}

[[noreturn]] inline void line_error(std::size_t line, const std::string& what) {
    throw input_error("line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t to_uint(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        line_error(line, "expected a non-negative integer, got '" + tok + "'");
    if (tok.size() > 18) line_error(line, "integer '" + tok + "' too large");
    return std::stoull(tok);
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

/// "key=value" with the expected key.
inline std::uint64_t keyed(const std::string& tok, const std::string& key, std::size_t line) {
    if (tok.rfind(key + "=", 0) != 0) line_error(line, "expected '" + key + "=<n>'");
    return to_uint(tok.substr(key.size() + 1), line);
}

inline Graph graph_from_lines(const std::vector<Line>& lines, std::size_t begin, std::size_t end) {
    if (begin >= end) throw input_error("empty graph block");
    auto head = tokens(lines[begin].text);
    if (head.size() != 1) line_error(lines[begin].number, "expected 'v=<n>'");
    const std::size_t v = keyed(head[0], "v", lines[begin].number);
    if (v > Graph::max_vertices) line_error(lines[begin].number, "at most 64 vertices supported");
    Graph g(v);
    std::optional<std::vector<std::uint8_t>> colors;
    for (std::size_t i = begin + 1; i < end; ++i) {
        const auto& ln = lines[i];
        auto tok = tokens(ln.text);
        try {
            if (tok.size() == 3 && tok[0] == "color") {
                if (!colors) colors.emplace(v, std::uint8_t{255});
                const auto u = to_uint(tok[1], ln.number), c = to_uint(tok[2], ln.number);
                if (u >= v) line_error(ln.number, "vertex out of range");
                if (c > 2) line_error(ln.number, "colors are 0, 1 or 2");
                (*colors)[u] = static_cast<std::uint8_t>(c);
            } else if (tok.size() == 2) {
                const auto u = to_uint(tok[0], ln.number), w = to_uint(tok[1], ln.number);
                if (u >= v || w >= v) line_error(ln.number, "vertex out of range");
                if (u == w) line_error(ln.number, "self-loop");
                g.set_edge(u, w);
            } else {
                line_error(ln.number, "expected 'u w' or 'color u c'");
            }
        } catch (const input_error& e) {
            if (std::string(e.what()).rfind("line ", 0) == 0) throw;
            line_error(ln.number, e.what());
        }
    }
    if (colors) {
        for (std::size_t u = 0; u < v; ++u)
            if ((*colors)[u] == 255) throw input_error("coloring is partial: vertex " + std::to_string(u) + " has no color");
        g.set_colors(std::move(*colors));
    }
    return g;
}

} // namespace detail

inline Graph parse_graph(const std::string& text) {
    auto lines = detail::content_lines(text);
    return detail::graph_from_lines(lines, 0, lines.size());
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "v=" << g.size() << '\n';
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t w = u + 1; w < g.size(); ++w)
            if (g.has_edge(u, w)) os << u << ' ' << w << '\n';
    if (g.colored())
        for (std::size_t u = 0; u < g.size(); ++u) os << "color " << u << ' ' << int(g.colors()[u]) << '\n';
    return os.str();
}

inline ClassSpec parse_class_spec(const std::string& text) {
    auto lines = detail::content_lines(text);
    ClassSpec spec;
    std::size_t i = 0;
    if (!lines.empty() && lines[0].text.rfind("mode=", 0) == 0) {
        const std::string mode = lines[0].text.substr(5);
        if (mode == "generators") spec.mode = ClassSpec::Mode::generators;
        else if (mode == "forbidden") spec.mode = ClassSpec::Mode::forbidden;
        else detail::line_error(lines[0].number, "mode must be 'generators' or 'forbidden'");
        i = 1;
    }
    std::size_t start = i;
    for (; i <= lines.size(); ++i) {
        if (i == lines.size() || lines[i].text == "---") {
            if (i > start) spec.graphs.push_back(detail::graph_from_lines(lines, start, i));
            start = i + 1;
        }
    }
    if (spec.graphs.empty()) throw input_error("class file lists no graphs");
    return spec;
}

inline FinRelation parse_relation(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw input_error("empty relation file");
    auto head = detail::tokens(lines[0].text);
    if (head.size() != 2) detail::line_error(lines[0].number, "expected 'a=<size> r=<arity>'");
    const auto a = detail::keyed(head[0], "a", lines[0].number);
    const auto r = detail::keyed(head[1], "r", lines[0].number);
    FinRelation d(a, r);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = detail::tokens(lines[i].text);
        if (tok.size() != r) detail::line_error(lines[i].number, "tuple needs " + std::to_string(r) + " entries");
        Tuple t;
        for (const auto& s : tok) {
            auto x = detail::to_uint(s, lines[i].number);
            if (x >= a) detail::line_error(lines[i].number, "entry " + s + " outside universe");
            t.push_back(static_cast<std::uint32_t>(x));
        }
        d.insert(t);
    }
    return d;
}

inline std::string format_relation(const FinRelation& d) {
    std::ostringstream os;
    os << "a=" << d.universe() << " r=" << d.arity() << '\n';
    for (const auto& t : d.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// OEIS b-files

struct BFileEntry {
    std::int64_t n;
    BigInt value;
};

/// Entries must have consecutive indices.
inline std::vector<BFileEntry> parse_bfile(const std::string& text) {
    std::vector<BFileEntry> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        auto tok = detail::tokens(raw);
        if (tok.size() != 2) detail::line_error(no, "malformed b-file line, expected 'n a(n)'");
        const std::string& ns = tok[0];
        const std::string& vs = tok[1];
        const bool n_ok = !ns.empty() && ns.find_first_not_of("-0123456789") == std::string::npos &&
                          ns.find('-', 1) == std::string::npos && ns != "-" && ns.size() < 18;
        const bool v_ok = !vs.empty() && vs.find_first_not_of("-0123456789") == std::string::npos &&
                          vs.find('-', 1) == std::string::npos && vs != "-";
        if (!n_ok || !v_ok) detail::line_error(no, "malformed b-file line, expected 'n a(n)'");
        BFileEntry e{std::stoll(ns), BigInt(vs)};
        if (!out.empty() && e.n != out.back().n + 1) detail::line_error(no, "b-file indices are not consecutive");
        out.push_back(std::move(e));
    }
    if (out.empty()) throw input_error("b-file has no entries");
    return out;
}

struct Mismatch {
    std::int64_t n;
    BigInt ours;
    BigInt theirs;
};

struct OeisComparison {
    std::int64_t offset = 0;    // our index of the b-file's first entry
    std::int64_t lo = 0, hi = -1; // compared range, in our indexing
    std::size_t compared = 0;
    std::vector<Mismatch> mismatches;
    bool agree() const { return compared > 0 && mismatches.empty(); }
};

/// Aligns b-file entry k (0-based) with our index offset + k, where offset
/// defaults to the b-file's first n. Compares the overlap, capped at max_n.
inline OeisComparison compare_with_bfile(const IntSeq& ours, const std::vector<BFileEntry>& bfile,
                                         std::optional<std::int64_t> offset = std::nullopt,
                                         std::optional<std::int64_t> max_n = std::nullopt) {
    OeisComparison r;
    r.offset = offset.value_or(bfile.front().n);
    r.lo = std::max<std::int64_t>(0, r.offset);
    r.hi = std::min<std::int64_t>(static_cast<std::int64_t>(ours.values.size()) - 1,
                                  r.offset + static_cast<std::int64_t>(bfile.size()) - 1);
    if (max_n) r.hi = std::min(r.hi, *max_n);
    for (std::int64_t i = r.lo; i <= r.hi; ++i) {
        const auto& theirs = bfile[static_cast<std::size_t>(i - r.offset)].value;
        const auto& mine = ours.values[static_cast<std::size_t>(i)];
        ++r.compared;
        if (mine != theirs) r.mismatches.push_back({i, mine, theirs});
    }
    return r;
}

} // namespace growthlab::io
