#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "multigraph.hpp"

namespace oddimm {

class parse_error : public error {
public:
    enum class Kind { malformed_header, malformed_edge, vertex_out_of_range, loop_edge };

    parse_error(Kind k, int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), kind(k), line(line) {}

    Kind kind;
    int line;
};

// Text format:
//   c <comment>
//   p mg <vertices> <edge-lines>
//   e <u> <v> <multiplicity>     (1-based endpoints, multiplicity >= 1)
// A multiplicity-k line expands to k parallel edges with consecutive ids.
inline Multigraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    int n = 0, mlines = 0, seen = 0;
    Multigraph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (!saw_header) {
            std::string fmt;
            if (tag != "p" || !(ss >> fmt) || fmt != "mg" || !(ss >> n >> mlines) || n < 0 ||
                mlines < 0 || (ss >> fmt))
                throw parse_error(parse_error::Kind::malformed_header, lineno,
                                  "expected header 'p mg <n> <edge-lines>'");
            saw_header = true;
            g = Multigraph(n);
            continue;
        }
        if (tag != "e")
            throw parse_error(parse_error::Kind::malformed_edge, lineno,
                              "expected edge line 'e <u> <v> <mult>'");
        int u = 0, v = 0, mult = 0;
        std::string rest;
        if (!(ss >> u >> v >> mult) || mult < 1 || (ss >> rest))
            throw parse_error(parse_error::Kind::malformed_edge, lineno,
                              "expected edge line 'e <u> <v> <mult>'");
        if (u < 1 || v < 1 || u > n || v > n)
            throw parse_error(parse_error::Kind::vertex_out_of_range, lineno,
                              "endpoint outside 1.." + std::to_string(n));
        if (u == v)
            throw parse_error(parse_error::Kind::loop_edge, lineno,
                              "loop at vertex " + std::to_string(u));
        if (++seen > mlines)
            throw parse_error(parse_error::Kind::malformed_edge, lineno,
                              "more edge lines than the header announced");
        for (int k = 0; k < mult; ++k) g.add_edge(u - 1, v - 1);
    }
    if (!saw_header)
        throw parse_error(parse_error::Kind::malformed_header, lineno, "missing header");
    if (seen != mlines)
        throw parse_error(parse_error::Kind::malformed_edge, lineno,
                          "header announced " + std::to_string(mlines) + " edge lines, got " +
                              std::to_string(seen));
    return g;
}

inline Multigraph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

// Normal form: parallel edges merged into one line with a multiplicity,
// endpoint pairs written low-high and sorted. Comments are not preserved.
inline std::string serialize_graph(const Multigraph& g) {
    std::map<std::pair<int, int>, int> mult;
    for (const Edge& e : g.edges) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    std::ostringstream out;
    out << "p mg " << g.n << " " << mult.size() << "\n";
    for (const auto& [pair, k] : mult)
        out << "e " << pair.first + 1 << " " << pair.second + 1 << " " << k << "\n";
    return out.str();
}

// graph6 encoding of a simple graph on at most 62 vertices (plenty at the
// scales this library runs at). Used for compact one-line corpus entries.
inline std::string to_graph6(const Multigraph& g) {
    if (!g.is_simple()) throw invariant_error("graph6 encodes simple graphs only");
    if (g.n > 62) throw invariant_error("graph6 writer limited to 62 vertices");
    auto rows = adjacency_bits(g);
    std::string out(1, static_cast<char>(g.n + 63));
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) {
            if (rows[u][v / 64] >> (v % 64) & 1) cur |= char(1 << bit);
            if (--bit < 0) {
                out.push_back(cur + 63);
                bit = 5;
                cur = 0;
            }
        }
    if (bit != 5) out.push_back(cur + 63);
    return out;
}

inline Multigraph from_graph6(const std::string& s) {
    if (s.empty()) throw parse_error(parse_error::Kind::malformed_header, 1, "empty graph6 line");
    int n = s[0] - 63;
    if (n < 0 || n > 62)
        throw parse_error(parse_error::Kind::malformed_header, 1, "unsupported graph6 size byte");
    Multigraph g(n);
    size_t pos = 1;
    int bit = 5;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (pos >= s.size())
                throw parse_error(parse_error::Kind::malformed_edge, 1, "graph6 line truncated");
            if ((s[pos] - 63) >> bit & 1) g.add_edge(u, v);
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    return g;
}

}  // namespace oddimm
