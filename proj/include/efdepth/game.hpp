#pragma once

#include "efdepth/graph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace efdepth {

/// Left is G (the host containing the pattern), right is H.
enum class Side { left, right };

enum class Player { spoiler, duplicator };

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }

inline const char* side_id(Side s) { return s == Side::left ? "G" : "H"; }

inline const char* player_name(Player p) { return p == Player::spoiler ? "spoiler" : "duplicator"; }

struct Move {
    Side side;
    Vertex vertex;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Chosen pairs (x_i in G, y_i in H) in round order. Both sides are duplicate-free.
class Configuration {
public:
    const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    VertexSet used(Side s) const { return s == Side::left ? used_left_ : used_right_; }

    bool is_used(Side s, Vertex v) const { return (used(s) >> v) & 1U; }

    Vertex at(std::size_t i, Side s) const { return s == Side::left ? pairs_[i].first : pairs_[i].second; }

    /// Appends a pair; throws if either vertex is already chosen on its side.
    void push(Vertex x, Vertex y)
    {
        if ((used_left_ & bit(x)) || (used_right_ & bit(y)))
            throw std::logic_error("configuration would repeat a chosen vertex");
        pairs_.emplace_back(x, y);
        used_left_ |= bit(x);
        used_right_ |= bit(y);
    }

    void pop()
    {
        auto [x, y] = pairs_.back();
        used_left_ &= ~bit(x);
        used_right_ &= ~bit(y);
        pairs_.pop_back();
    }

    Configuration with(Vertex x, Vertex y) const
    {
        Configuration c = *this;
        c.push(x, y);
        return c;
    }

    /// Order-independent text key: sorted "x/y" pairs.
    std::string key() const
    {
        auto sorted = pairs_;
        std::sort(sorted.begin(), sorted.end());
        std::string out;
        for (auto [x, y] : sorted) {
            if (!out.empty())
                out += ',';
            out += std::to_string(x) + "/" + std::to_string(y);
        }
        return out;
    }

private:
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    VertexSet used_left_ = 0;
    VertexSet used_right_ = 0;
};

/// x_i ~ x_j in G iff y_i ~ y_j in H, for all i < j.
inline bool partial_iso_check(const Graph& g, const Graph& h, const Configuration& c)
{
    const auto& p = c.pairs();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.adjacent(p[i].first, p[j].first) != h.adjacent(p[i].second, p[j].second))
                return false;
    return true;
}

/// Free vertices on `reply_side` whose adjacency to the chosen vertices matches
/// that of `v` (on the opposite side) to its chosen vertices.
inline VertexSet matching_replies(const Graph& g, const Graph& h, const Configuration& c, Move m)
{
    const Graph& from = m.side == Side::left ? g : h;
    const Graph& to = m.side == Side::left ? h : g;
    const Side reply_side = other(m.side);
    VertexSet cand = to.all() & ~c.used(reply_side);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const VertexSet nb = to.neighbors(c.at(i, reply_side));
        cand &= from.adjacent(m.vertex, c.at(i, m.side)) ? nb : ~nb;
    }
    return cand;
}

/// One round of play as recorded in transcripts.
struct Round {
    Move spoiler;
    std::optional<Vertex> reply;
};

inline std::string format_round(int t, const Round& r)
{
    std::ostringstream os;
    os << "round " << t << ": S " << side_id(r.spoiler.side) << ' ' << r.spoiler.vertex << " | D ";
    if (r.reply)
        os << side_id(other(r.spoiler.side)) << ' ' << *r.reply;
    else
        os << "none";
    return os.str();
}

inline std::string format_transcript(const std::vector<Round>& rounds, Player winner)
{
    std::string out;
    for (std::size_t t = 0; t < rounds.size(); ++t)
        out += format_round(static_cast<int>(t + 1), rounds[t]) + "\n";
    out += std::string("winner: ") + player_name(winner) + "\n";
    return out;
}

} // namespace efdepth
