#pragma once

#include "efdepth/game.hpp"
#include "efdepth/solver.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace efdepth {

struct PlayResult {
    std::vector<Round> rounds;
    std::optional<Player> winner; ///< empty if input ended mid-game
    std::string transcript;
};

namespace detail {

inline bool read_line(std::istream& in, std::string& line)
{
    return static_cast<bool>(std::getline(in, line));
}

} // namespace detail

/// Text game against the solver. The human plays `human`; the engine answers
/// from the exact solution. Illegal input re-prompts without using up a round.
///
/// Spoiler input: `G <v>` or `H <v>`. Duplicator input: `<v>` in the other graph.
inline PlayResult play_interactive(const Graph& left, const Graph& right, int rounds, Player human, std::istream& in,
                                   std::ostream& out, SolverOptions opts = {})
{
    GameSolver solver(left, right, opts);
    const Player expected = solver.solve(rounds);
    out << "solver: " << player_name(expected) << " wins " << rounds << " round(s) with best play\n";

    PlayResult result;
    Configuration c;
    auto graph = [&](Side s) -> const Graph& { return s == Side::left ? left : right; };
    auto finish = [&](Player w) {
        result.winner = w;
        result.transcript = format_transcript(result.rounds, w);
        out << result.transcript;
        return result;
    };
    auto abort = [&] {
        for (std::size_t t = 0; t < result.rounds.size(); ++t)
            result.transcript += format_round(static_cast<int>(t + 1), result.rounds[t]) + "\n";
        result.transcript += "aborted: input closed\n";
        out << result.transcript;
        return result;
    };

    for (int t = 1; t <= rounds; ++t) {
        if (c.used(Side::left) == left.all() && c.used(Side::right) == right.all())
            break;
        const int remaining = rounds - t + 1;
        Move move{};
        if (human == Player::spoiler) {
            for (;;) {
                out << "round " << t << " spoiler> " << std::flush;
                std::string line;
                if (!detail::read_line(in, line))
                    return abort();
                std::istringstream ls(line);
                std::string side;
                Vertex v = -1;
                if ((ls >> side >> v) && (side == "G" || side == "H")) {
                    const Side s = side == "G" ? Side::left : Side::right;
                    if (v >= 0 && v < graph(s).order() && !c.is_used(s, v)) {
                        move = {s, v};
                        break;
                    }
                }
                out << "illegal move; enter 'G <v>' or 'H <v>' naming an unchosen vertex\n";
            }
        } else {
            if (auto win = solver.winning_spoiler_move(c, remaining)) {
                move = *win;
            } else {
                // Losing position: any legal move.
                const Side s = (left.all() & ~c.used(Side::left)) ? Side::left : Side::right;
                move = {s, static_cast<Vertex>(std::countr_zero(graph(s).all() & ~c.used(s)))};
            }
            out << "round " << t << ": spoiler plays " << side_id(move.side) << ' ' << move.vertex << '\n';
        }

        const Side rs = other(move.side);
        std::optional<Vertex> reply;
        if (human == Player::duplicator) {
            if (graph(rs).all() & ~c.used(rs)) {
                for (;;) {
                    out << "round " << t << " duplicator (" << side_id(rs) << ")> " << std::flush;
                    std::string line;
                    if (!detail::read_line(in, line))
                        return abort();
                    std::istringstream ls(line);
                    Vertex w = -1;
                    if ((ls >> w) && w >= 0 && w < graph(rs).order() && !c.is_used(rs, w)) {
                        reply = w;
                        break;
                    }
                    out << "illegal reply; name an unchosen vertex of " << side_id(rs) << '\n';
                }
            }
        } else {
            reply = solver.winning_reply(c, move, remaining);
            if (!reply) {
                const VertexSet any = matching_replies(left, right, c, move);
                const VertexSet free = graph(rs).all() & ~c.used(rs);
                if (any)
                    reply = static_cast<Vertex>(std::countr_zero(any));
                else if (free)
                    reply = static_cast<Vertex>(std::countr_zero(free));
            }
            if (reply)
                out << "round " << t << ": duplicator plays " << side_id(rs) << ' ' << *reply << '\n';
        }

        result.rounds.push_back({move, reply});
        if (!reply)
            return finish(Player::spoiler);
        if (move.side == Side::left)
            c.push(move.vertex, *reply);
        else
            c.push(*reply, move.vertex);
        if (!partial_iso_check(left, right, c))
            return finish(Player::spoiler);
    }
    return finish(Player::duplicator);
}

} // namespace efdepth
