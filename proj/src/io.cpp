#include "couponkit/io.hpp"

#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace couponkit {

namespace {

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    long long v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        v = v * 10 + (ch - '0');
        if (v > std::numeric_limits<int>::max()) return false;
    }
    out = static_cast<int>(v);
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') fail(lineno, "CR line endings not allowed");
        if (!line.empty() && line[0] == '#') continue;
        auto toks = split_ws(line);
        if (toks.empty()) fail(lineno, "blank line");
        if (n < 0) {
            if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cub")
                fail(lineno, "expected header 'p cub <n> <m>', got '" + toks[0] + "'");
            if (!parse_int(toks[2], n) || !parse_int(toks[3], m))
                fail(lineno, "bad header numbers");
            if (m > 1LL * n * (n - 1) / 2) fail(lineno, "m exceeds the simple-graph maximum");
            continue;
        }
        if (toks[0] != "e" || toks.size() != 3)
            fail(lineno, "expected edge line 'e <u> <v>', got '" + toks[0] + "'");
        if (static_cast<int>(edges.size()) >= m) fail(lineno, "more than m edge lines");
        int u, v;
        if (!parse_int(toks[1], u) || !parse_int(toks[2], v))
            fail(lineno, "bad edge endpoints");
        if (u >= v) fail(lineno, "edge endpoints must satisfy u < v");
        if (v >= n) fail(lineno, "edge endpoint out of range");
        if (!seen.emplace(u, v).second) fail(lineno, "duplicate edge " + toks[1] + " " + toks[2]);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("missing 'p cub' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " edges, got " +
                         std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p cub " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Coloring parse_coloring(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_coloring_string(text);
}

Coloring parse_coloring_string(const std::string& text) {
    std::string line = text;
    if (!line.empty() && line.back() == '\n') line.pop_back();
    Coloring c(static_cast<int>(line.size()));
    for (int i = 0; i < c.size(); ++i) {
        if (line[i] != '0' && line[i] != '1')
            throw ParseError("coloring: character at position " + std::to_string(i) +
                             " is not 0 or 1");
        c.set(i, line[i] - '0');
    }
    return c;
}

std::string format_coloring(const Coloring& c) {
    std::string out;
    out.reserve(c.size() + 1);
    for (int v = 0; v < c.size(); ++v)
        out.push_back(c.is_set(v) ? static_cast<char>('0' + c.get(v)) : '?');
    out.push_back('\n');
    return out;
}

}  // namespace couponkit
