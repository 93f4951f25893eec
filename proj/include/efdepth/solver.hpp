#pragma once

#include "efdepth/canonical.hpp"
#include "efdepth/game.hpp"
#include "efdepth/graph.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace efdepth {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("undecided within budget of " + std::to_string(budget) + " visited states"),
          budget_(budget)
    {
    }

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

struct SolverOptions {
    std::uint64_t node_budget = 1'000'000'000;
    /// Restrict the opening move (and Duplicator's opening reply) to automorphism
    /// orbit representatives.
    bool orbit_reduction = true;
    /// Record winning moves/replies; disables orbit reduction so the table covers
    /// every opening.
    bool record_strategy = false;
    /// Worker threads for independent opening moves.
    int jobs = 1;
};

/// Strategy entries keyed by "r<remaining>:<config key>" (Spoiler to move) or
/// "r<remaining>:<config key>|S <side> <v>" (Duplicator to reply).
using StrategyTable = std::map<std::string, std::string>;

struct GameOutcome {
    Player winner = Player::duplicator;
    std::uint64_t nodes = 0;
    std::optional<StrategyTable> strategy;
};

/// Exact solver for the no-repeat EF game. Memoizes Spoiler-to-move positions on
/// (remaining rounds, sorted pair set).
class GameSolver {
public:
    GameSolver(const Graph& left, const Graph& right, SolverOptions opts = {})
        : g_(left), h_(right), opts_(opts)
    {
        if (opts_.record_strategy)
            opts_.orbit_reduction = false;
    }

    const Graph& left() const { return g_; }
    const Graph& right() const { return h_; }

    /// Does Spoiler win from configuration `c` with `remaining` rounds still to play?
    /// `c` must be a partial isomorphism.
    bool spoiler_wins(const Configuration& c, int remaining)
    {
        Configuration work = c;
        return spoiler_wins_impl(work, remaining);
    }

    /// A Spoiler move that wins from `c`, if one exists.
    std::optional<Move> winning_spoiler_move(const Configuration& c, int remaining)
    {
        if (remaining <= 0)
            return std::nullopt;
        Configuration work = c;
        for (Side s : {Side::left, Side::right}) {
            const VertexSet free = graph(s).all() & ~work.used(s);
            std::optional<Move> found;
            for_each_vertex(free, [&](Vertex v) {
                if (!found && !duplicator_holds(work, {s, v}, remaining))
                    found = Move{s, v};
            });
            if (found)
                return found;
        }
        return std::nullopt;
    }

    /// A Duplicator reply to `m` after which Duplicator still wins, if one exists.
    /// `remaining` counts the round being played.
    std::optional<Vertex> winning_reply(const Configuration& c, Move m, int remaining)
    {
        Configuration work = c;
        std::optional<Vertex> found;
        for_each_vertex(matching_replies(g_, h_, work, m), [&](Vertex w) {
            if (found)
                return;
            push_move(work, m, w);
            if (!spoiler_wins_impl(work, remaining - 1))
                found = w;
            work.pop();
        });
        return found;
    }

    /// Winner of the r-round game from the empty configuration.
    Player solve(int rounds)
    {
        if (rounds < 0)
            throw std::invalid_argument("round count must be nonnegative");
        Configuration empty;
        return spoiler_wins_impl(empty, rounds) ? Player::spoiler : Player::duplicator;
    }

    std::uint64_t nodes() const { return nodes_; }

    const StrategyTable& strategy() const { return table_; }

    /// Counter shared across cooperating solvers (for a global budget).
    void share_counter(std::atomic<std::uint64_t>* counter) { shared_ = counter; }

    /// Restricts the opening Spoiler moves considered by solve().
    void restrict_openings(std::vector<Move> moves) { openings_ = std::move(moves); }

    std::vector<Move> opening_moves()
    {
        std::vector<Move> out;
        for (Side s : {Side::left, Side::right}) {
            if (opts_.orbit_reduction) {
                for (const auto& cell : orbits(s))
                    out.push_back({s, cell.front()});
            } else {
                for_each_vertex(graph(s).all(), [&](Vertex v) { out.push_back({s, v}); });
            }
        }
        return out;
    }

private:
    const Graph& graph(Side s) const { return s == Side::left ? g_ : h_; }

    const std::vector<std::vector<Vertex>>& orbits(Side s)
    {
        auto& slot = s == Side::left ? orbits_left_ : orbits_right_;
        if (!slot)
            slot = automorphism_orbits(graph(s));
        return *slot;
    }

    static void push_move(Configuration& c, Move m, Vertex reply)
    {
        if (m.side == Side::left)
            c.push(m.vertex, reply);
        else
            c.push(reply, m.vertex);
    }

    void count_node()
    {
        ++nodes_;
        std::uint64_t total = nodes_;
        if (shared_)
            total = shared_->fetch_add(1, std::memory_order_relaxed) + 1;
        if (total > opts_.node_budget)
            throw BudgetExceeded(opts_.node_budget);
    }

    std::string memo_key(const Configuration& c, int remaining) const
    {
        auto sorted = c.pairs();
        std::sort(sorted.begin(), sorted.end());
        std::string key(1, static_cast<char>(remaining));
        for (auto [x, y] : sorted) {
            key += static_cast<char>(x);
            key += static_cast<char>(y);
        }
        return key;
    }

    std::string table_key(const Configuration& c, int remaining) const
    {
        return "r" + std::to_string(remaining) + ":" + c.key();
    }

    static std::string move_text(const char* who, Side s, Vertex v)
    {
        return std::string(who) + " " + side_id(s) + " " + std::to_string(v);
    }

    bool game_over(const Configuration& c) const
    {
        return c.used(Side::left) == g_.all() && c.used(Side::right) == h_.all();
    }

    bool last_round_spoiler_wins(const Configuration& c)
    {
        for (Side s : {Side::left, Side::right}) {
            const VertexSet free = graph(s).all() & ~c.used(s);
            std::optional<Vertex> winner;
            for_each_vertex(free, [&](Vertex v) {
                if (winner)
                    return;
                VertexSet replies = matching_replies(g_, h_, c, {s, v});
                if (!replies)
                    winner = v;
                else if (opts_.record_strategy)
                    table_[table_key(c, 1) + "|" + move_text("S", s, v)] =
                        move_text("D", other(s), static_cast<Vertex>(std::countr_zero(replies)));
            });
            if (winner) {
                if (opts_.record_strategy)
                    table_[table_key(c, 1)] = move_text("S", s, *winner);
                return true;
            }
        }
        return false;
    }

    /// Can Duplicator answer `m` and survive the remaining rounds?
    bool duplicator_holds(Configuration& c, Move m, int remaining)
    {
        VertexSet replies = matching_replies(g_, h_, c, m);
        if (c.empty() && opts_.orbit_reduction) {
            VertexSet reps = 0;
            for (const auto& cell : orbits(other(m.side)))
                reps |= bit(cell.front());
            replies &= reps;
        }
        // Try replies of similar degree first; this only affects speed.
        const int want = graph(m.side).degree(m.vertex);
        std::vector<Vertex> order;
        for_each_vertex(replies, [&](Vertex w) { order.push_back(w); });
        const Graph& to = graph(other(m.side));
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return std::abs(to.degree(a) - want) < std::abs(to.degree(b) - want);
        });
        for (Vertex w : order) {
            push_move(c, m, w);
            const bool lost = spoiler_wins_impl(c, remaining - 1);
            c.pop();
            if (!lost) {
                if (opts_.record_strategy)
                    table_[table_key(c, remaining) + "|" + move_text("S", m.side, m.vertex)] =
                        move_text("D", other(m.side), w);
                return true;
            }
        }
        return false;
    }

    bool spoiler_wins_impl(Configuration& c, int remaining)
    {
        if (remaining <= 0 || game_over(c))
            return false;
        count_node();
        if (remaining == 1)
            return last_round_spoiler_wins(c);
        // The root is never cached: its move set can be restricted per call.
        std::string key = c.empty() ? std::string() : memo_key(c, remaining);
        if (!c.empty())
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;

        bool result = false;
        auto try_move = [&](Move m) {
            if (result)
                return;
            if (!duplicator_holds(c, m, remaining)) {
                result = true;
                if (opts_.record_strategy)
                    table_[table_key(c, remaining)] = move_text("S", m.side, m.vertex);
            }
        };
        if (c.empty() && openings_) {
            for (Move m : *openings_)
                try_move(m);
        } else if (c.empty()) {
            for (Move m : opening_moves())
                try_move(m);
        } else {
            for (Side s : {Side::left, Side::right})
                for_each_vertex(graph(s).all() & ~c.used(s), [&](Vertex v) { try_move({s, v}); });
        }
        if (!c.empty())
            memo_.emplace(std::move(key), result);
        return result;
    }

    const Graph& g_;
    const Graph& h_;
    SolverOptions opts_;
    std::unordered_map<std::string, bool> memo_;
    StrategyTable table_;
    std::uint64_t nodes_ = 0;
    std::atomic<std::uint64_t>* shared_ = nullptr;
    std::optional<std::vector<std::vector<Vertex>>> orbits_left_;
    std::optional<std::vector<std::vector<Vertex>>> orbits_right_;
    std::optional<std::vector<Move>> openings_;
};

/// Solves the r-round game. With jobs > 1 the opening moves are split across
/// threads, each with a private transposition table; the winner does not depend
/// on scheduling. Throws BudgetExceeded if the node budget runs out.
inline GameOutcome solve(const Graph& left, const Graph& right, int rounds, SolverOptions opts = {})
{
    GameOutcome out;
    if (opts.jobs <= 1 || opts.record_strategy || rounds == 0) {
        GameSolver solver(left, right, opts);
        out.winner = solver.solve(rounds);
        out.nodes = solver.nodes();
        if (opts.record_strategy)
            out.strategy = solver.strategy();
        return out;
    }

    GameSolver planner(left, right, opts);
    const auto openings = planner.opening_moves();
    std::atomic<std::uint64_t> counter{0};
    std::atomic<std::size_t> next{0};
    std::atomic<bool> spoiler_found{false};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        GameSolver solver(left, right, opts);
        solver.share_counter(&counter);
        try {
            for (std::size_t i = next++; i < openings.size() && !spoiler_found; i = next++) {
                solver.restrict_openings({openings[i]});
                if (solver.solve(rounds) == Player::spoiler)
                    spoiler_found = true;
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < opts.jobs; ++j)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    // A found Spoiler win is a verdict even if another worker ran out of budget.
    if (!spoiler_found && error)
        std::rethrow_exception(error);
    out.winner = spoiler_found ? Player::spoiler : Player::duplicator;
    out.nodes = counter.load();
    return out;
}

} // namespace efdepth
