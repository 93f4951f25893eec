#pragma once

#include "efdepth/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace efdepth {

enum class GraphFormat { graph6, edgelist };

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6: one byte n+63, then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups.
inline std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > 62)
        throw GraphError("graph6 encoding supports n <= 62, got " + std::to_string(n));
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty input");
    const int c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 63 + 62)
        throw ParseError("graph6: byte 0 (" + std::to_string(c0) + ") is not a vertex count in [0, 62]");
    const int n = c0 - 63;
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t groups = (pairs + 5) / 6;
    if (text.size() != 1 + groups)
        throw ParseError("graph6: expected " + std::to_string(1 + groups) + " bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(text.size()));
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(pos) + " (" + std::to_string(c) +
                             ") outside [63, 126]");
        const int group = c - 63;
        for (int b = 5; b >= 0; --b, ++k) {
            const bool set = (group >> b) & 1;
            if (k >= pairs) {
                if (set)
                    throw ParseError("graph6: nonzero padding bit in byte " + std::to_string(pos));
                continue;
            }
            // Column-order index k -> (u, v) with u < v.
            Vertex v = 1;
            std::size_t start = 0;
            while (start + static_cast<std::size_t>(v) <= k) {
                start += static_cast<std::size_t>(v);
                ++v;
            }
            const Vertex u = static_cast<Vertex>(k - start);
            if (set) {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
    }
    return Graph::from_rows(std::move(rows));
}

/// Edge-list text: `n <N>` then `e <u> <v>` lines; `#` starts a comment.
inline std::string to_edgelist(const Graph& g)
{
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << "e " << u << ' ' << v << '\n';
    return os.str();
}

inline Graph from_edgelist(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    auto fail = [&](const std::string& why) {
        throw ParseError("edgelist line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;
        if (tag == "n") {
            if (n >= 0)
                fail("duplicate vertex count");
            if (!(ls >> n) || n < 0)
                fail("expected a nonnegative vertex count");
        } else if (tag == "e") {
            if (n < 0)
                fail("edge before vertex count");
            Vertex u, v;
            if (!(ls >> u >> v))
                fail("expected two vertex indices");
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail("endpoint out of range [0, " + std::to_string(n) + ")");
            if (u == v)
                fail("self-loop at vertex " + std::to_string(u));
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                fail("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
            edges.emplace_back(u, v);
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest)
            fail("trailing token '" + rest + "'");
    }
    if (n < 0)
        throw ParseError("edgelist: missing 'n <N>' line");
    return Graph::build(n, edges);
}

inline std::string encode(const Graph& g, GraphFormat f)
{
    return f == GraphFormat::graph6 ? to_graph6(g) : to_edgelist(g);
}

inline Graph decode(std::string_view text, GraphFormat f)
{
    return f == GraphFormat::graph6 ? from_graph6(text) : from_edgelist(text);
}

/// Edge-list if the first meaningful token is `n` or the text opens with a comment,
/// graph6 otherwise.
inline GraphFormat sniff_format(std::string_view text)
{
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
        ++i;
    if (i < text.size() && text[i] == '#')
        return GraphFormat::edgelist;
    if (i + 1 < text.size() && text[i] == 'n' && (text[i + 1] == ' ' || text[i + 1] == '\t'))
        return GraphFormat::edgelist;
    return GraphFormat::graph6;
}

inline Graph decode_any(std::string_view text)
{
    auto f = sniff_format(text);
    if (f == GraphFormat::graph6) {
        // Tolerate surrounding whitespace around a single graph6 token.
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.remove_suffix(1);
    }
    return decode(text, f);
}

} // namespace efdepth
