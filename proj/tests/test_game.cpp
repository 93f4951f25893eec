#include "oracles.hpp"

#include "efdepth/canonical.hpp"
#include "efdepth/eval.hpp"
#include "efdepth/extract.hpp"
#include "efdepth/families.hpp"
#include "efdepth/instances.hpp"
#include "efdepth/play.hpp"
#include "efdepth/policy.hpp"
#include "efdepth/solver.hpp"
#include "efdepth/synth.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace efdepth;

namespace {

using oracle::NaiveGame;

Player naive_winner(const Graph& g, const Graph& h, int r)
{
    return oracle::naive_spoiler_wins(g, h, r) ? Player::spoiler : Player::duplicator;
}

Graph random_graph(std::mt19937_64& rng, int n)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(u, v);
    return Graph::build(n, e);
}

std::vector<Vertex> shuffled(std::mt19937_64& rng, int n)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Player winner(const Graph& g, const Graph& h, int r, SolverOptions o = {}) { return solve(g, h, r, o).winner; }

} // namespace

TEST(PartialIso, Examples)
{
    const Graph k2 = complete_graph(2), e2 = empty_graph(2);
    Configuration c;
    EXPECT_TRUE(partial_iso_check(k2, k2, c));
    c.push(0, 0);
    EXPECT_TRUE(partial_iso_check(k2, k2, c));
    c.push(1, 1);
    EXPECT_TRUE(partial_iso_check(k2, k2, c));
    EXPECT_FALSE(partial_iso_check(k2, e2, c));
}

TEST(ConfigurationTest, NoRepeatAndKey)
{
    Configuration c;
    c.push(3, 1);
    c.push(0, 2);
    EXPECT_THROW(c.push(3, 0), std::logic_error);
    EXPECT_THROW(c.push(1, 2), std::logic_error);
    EXPECT_EQ(c.key(), "0/2,3/1");
    EXPECT_TRUE(c.is_used(Side::left, 3));
    EXPECT_TRUE(c.is_used(Side::right, 2));
    c.pop();
    EXPECT_FALSE(c.is_used(Side::right, 2));
    EXPECT_EQ(c.size(), 1U);
}

TEST(Solve, Examples)
{
    EXPECT_EQ(winner(complete_graph(2), complete_graph(2), 5), Player::duplicator);
    EXPECT_EQ(winner(complete_graph(2), empty_graph(2), 2), Player::spoiler);
    EXPECT_EQ(winner(complete_graph(2), empty_graph(2), 1), Player::duplicator);
    EXPECT_EQ(winner(disjoint_union(path_graph(4), path_graph(2)), path_graph(4), 2), Player::duplicator);
    EXPECT_EQ(winner(disjoint_union(cycle_graph(5), cycle_graph(6)), copies(2, cycle_graph(6)), 3),
              Player::duplicator);
    EXPECT_EQ(winner(cycle_graph(5), cycle_graph(6), 0), Player::duplicator);
    EXPECT_THROW(winner(cycle_graph(5), cycle_graph(6), -1), std::invalid_argument);
}

TEST(Solve, EarlyEndAndStuckDuplicator)
{
    // Both graphs exhausted after one round: the game stops, isomorphic so Duplicator.
    EXPECT_EQ(winner(complete_graph(1), complete_graph(1), 3), Player::duplicator);
    // Spoiler plays the second vertex of K2; the empty side has nothing left.
    EXPECT_EQ(winner(complete_graph(2), complete_graph(1), 2), Player::spoiler);
    EXPECT_EQ(winner(empty_graph(0), complete_graph(1), 1), Player::spoiler);
    EXPECT_EQ(winner(empty_graph(0), empty_graph(0), 4), Player::duplicator);
}

TEST(Solve, MatchesNaiveGameOnSmallGraphs)
{
    const auto reps = enumerate_up_to(4);
    std::mt19937_64 rng(41);
    for (const Graph& a : reps)
        for (const Graph& b0 : reps) {
            const Graph b = b0.permuted(shuffled(rng, b0.order()));
            for (int r = 0; r <= 4; ++r)
                ASSERT_EQ(winner(a, b, r), naive_winner(a, b, r)) << to_graph6(a) << " " << to_graph6(b) << " " << r;
        }
}

TEST(Solve, MatchesNaiveGameOnRandomPairs)
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 150; ++t) {
        const Graph a = random_graph(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        const Graph b = random_graph(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        const int r = std::uniform_int_distribution<int>(1, 3)(rng);
        ASSERT_EQ(winner(a, b, r), naive_winner(a, b, r)) << to_graph6(a) << " " << to_graph6(b) << " " << r;
    }
}

TEST(Solve, SymmetryAndMonotonicity)
{
    const auto reps = enumerate_up_to(4);
    for (const Graph& a : reps)
        for (const Graph& b : reps) {
            bool spoiler_seen = false;
            for (int r = 0; r <= 4; ++r) {
                const Player w = winner(a, b, r);
                ASSERT_EQ(w, winner(b, a, r));
                if (spoiler_seen) {
                    ASSERT_EQ(w, Player::spoiler) << to_graph6(a) << " " << to_graph6(b) << " " << r;
                }
                spoiler_seen = spoiler_seen || w == Player::spoiler;
            }
        }
}

TEST(Solve, IsomorphicInputsAlwaysDuplicator)
{
    std::mt19937_64 rng(47);
    for (const Graph& g : enumerate_up_to(5))
        for (int r = 0; r <= 5; ++r)
            ASSERT_EQ(winner(g, g.permuted(shuffled(rng, g.order())), r), Player::duplicator) << to_graph6(g);
}

TEST(Solve, ComplementInvariance)
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 80; ++t) {
        const Graph a = random_graph(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        const Graph b = random_graph(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        ASSERT_EQ(winner(a, b, r), winner(complement(a), complement(b), r));
    }
}

TEST(Solve, OptionsDoNotChangeTheWinner)
{
    std::mt19937_64 rng(59);
    for (int t = 0; t < 60; ++t) {
        const Graph a = random_graph(rng, std::uniform_int_distribution<int>(2, 7)(rng));
        const Graph b = t % 2 ? a.permuted(shuffled(rng, a.order()))
                              : random_graph(rng, std::uniform_int_distribution<int>(2, 7)(rng));
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        const Player base = winner(a, b, r);
        SolverOptions no_orbits;
        no_orbits.orbit_reduction = false;
        SolverOptions threads;
        threads.jobs = 3;
        SolverOptions record;
        record.record_strategy = true;
        ASSERT_EQ(winner(a, b, r, no_orbits), base);
        ASSERT_EQ(winner(a, b, r, threads), base);
        ASSERT_EQ(winner(a, b, r, record), base);
    }
    const InstanceBundle d = thm3_g41_instance();
    SolverOptions threads;
    threads.jobs = 4;
    EXPECT_EQ(winner(d.left, d.right, 3, threads), Player::duplicator);
}

TEST(Solve, BudgetIsAnErrorNotAVerdict)
{
    const InstanceBundle b = thm3_c5_instance();
    SolverOptions tiny;
    tiny.node_budget = 10;
    EXPECT_THROW(solve(b.left, b.right, 3, tiny), BudgetExceeded);
    tiny.jobs = 2;
    EXPECT_THROW(solve(b.left, b.right, 3, tiny), BudgetExceeded);
}

TEST(Solve, StrategyTableReplays)
{
    SolverOptions record;
    record.record_strategy = true;
    // Spoiler side: the recorded opening wins against every reply.
    {
        const Graph g = complete_graph(2), h = empty_graph(2);
        GameOutcome out = solve(g, h, 2, record);
        ASSERT_EQ(out.winner, Player::spoiler);
        const std::string move = out.strategy->at("r2:");
        ASSERT_EQ(move.substr(0, 4), "S G ");
        const Vertex v = std::stoi(move.substr(4));
        for (Vertex w = 0; w < 2; ++w) {
            NaiveGame game{g, h, {v}, {w}};
            EXPECT_TRUE(game.spoiler_wins(1));
        }
    }
    // Duplicator side: every opening has a recorded reply that still holds.
    {
        const Graph g = disjoint_union(path_graph(4), path_graph(2)), h = path_graph(4);
        GameOutcome out = solve(g, h, 2, record);
        ASSERT_EQ(out.winner, Player::duplicator);
        for (Side s : {Side::left, Side::right})
            for (Vertex v = 0; v < (s == Side::left ? g : h).order(); ++v) {
                const std::string key = std::string("r2:|S ") + side_id(s) + " " + std::to_string(v);
                ASSERT_TRUE(out.strategy->count(key)) << key;
                const Vertex w = std::stoi(out.strategy->at(key).substr(4));
                NaiveGame game{g, h, {}, {}};
                game.xs.push_back(s == Side::left ? v : w);
                game.ys.push_back(s == Side::left ? w : v);
                EXPECT_FALSE(game.spoiler_wins(1)) << key;
            }
    }
}

TEST(Extract, Examples)
{
    {
        const Formula phi = extract_distinguishing(complete_graph(2), empty_graph(2), 2);
        EXPECT_LE(quantifier_depth(phi), 2);
        EXPECT_TRUE(evaluate(phi, complete_graph(2)));
        EXPECT_FALSE(evaluate(phi, empty_graph(2)));
    }
    {
        const Graph g = disjoint_union(path_graph(4), path_graph(2)), h = path_graph(4);
        const Formula phi = extract_distinguishing(g, h, 3);
        EXPECT_LE(quantifier_depth(phi), 3);
        EXPECT_TRUE(evaluate(phi, g));
        EXPECT_FALSE(evaluate(phi, h));
    }
    EXPECT_THROW(extract_distinguishing(cycle_graph(5), cycle_graph(5), 4), NoSpoilerWin);
    // A right-side win is negated.
    const Formula phi = extract_distinguishing(empty_graph(2), complete_graph(2), 2);
    EXPECT_TRUE(evaluate(phi, empty_graph(2)));
    EXPECT_FALSE(evaluate(phi, complete_graph(2)));
}

TEST(Ehrenfeucht, BothDirectionsOnRandomPairs)
{
    std::mt19937_64 rng(61);
    int spoiler = 0, duplicator = 0;
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(rng, std::uniform_int_distribution<int>(1, 5)(rng));
        const Graph h = t % 3 == 0 ? g.permuted(shuffled(rng, g.order()))
                                   : random_graph(rng, std::uniform_int_distribution<int>(1, 5)(rng));
        const int r = std::uniform_int_distribution<int>(1, 3)(rng);
        if (winner(g, h, r) == Player::spoiler) {
            ++spoiler;
            const Formula phi = extract_distinguishing(g, h, r);
            ASSERT_LE(quantifier_depth(phi), r);
            ASSERT_TRUE(evaluate(phi, g));
            ASSERT_FALSE(evaluate(phi, h));
        } else {
            ++duplicator;
            for (int s = 0; s < 200; ++s) {
                const Formula phi = random_sentence(rng, r);
                ASSERT_EQ(evaluate(phi, g), evaluate(phi, h)) << to_string(phi);
            }
        }
    }
    EXPECT_GT(spoiler, 0);
    EXPECT_GT(duplicator, 0);
}

TEST(Policy, AlmostMultipartiteHolds)
{
    for (const std::vector<int>& p : {std::vector<int>{1, 2, 2, 2}, std::vector<int>{1, 3, 1, 1, 2}}) {
        const InstanceBundle b = gen_paper_instance("thm2", p);
        auto policy = paper_policy("thm2", p, b.left, b.right);
        const PolicyVerdict v = verify_policy(b.left, b.right, b.rounds, *policy);
        EXPECT_TRUE(v.holds);
        EXPECT_GT(v.lines, 0U);
        EXPECT_EQ(winner(b.left, b.right, b.rounds), Player::duplicator);
    }
}

TEST(Policy, AlmostMultipartiteClassMap)
{
    AlmostMultipartitePolicy p(4, 2);
    const Graph g = almost_multipartite_graph(4, 2, 1), h = almost_multipartite_graph(3, 2, 1);
    Configuration c;
    GameView view{g, h, c, 1, 3};
    // Left (class 2, part 1): class 2 unseen, so it maps to class 0 on the right.
    auto r = p.respond(view, {Side::left, almost_multipartite_index(4, 2, {2, 1, 0})});
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, almost_multipartite_index(3, 2, {0, 1, 0}));
    EXPECT_EQ(p.class_map().at(2), 0);
    // Right class 0 is now mapped back to left class 2.
    r = p.respond(view, {Side::right, almost_multipartite_index(3, 2, {0, 0, 0})});
    EXPECT_EQ(*r, almost_multipartite_index(4, 2, {2, 0, 0}));
    // A fresh right class takes the lowest left class not yet in the map.
    r = p.respond(view, {Side::right, almost_multipartite_index(3, 2, {2, 0, 0})});
    EXPECT_EQ(*r, almost_multipartite_index(4, 2, {0, 0, 0}));
}

TEST(Policy, MatchingPathHoldsForSmallM)
{
    for (int m = 1; m <= 3; ++m) {
        const InstanceBundle b = thm1_2_instance(m);
        auto policy = paper_policy("thm1_2", {m}, b.left, b.right);
        const PolicyVerdict v = verify_policy(b.left, b.right, b.rounds, *policy);
        EXPECT_TRUE(v.holds) << m;
        EXPECT_EQ(winner(b.left, b.right, b.rounds), Player::duplicator);
    }
}

TEST(Policy, NaiveLowestFreeFails)
{
    LowestFreePolicy naive;
    const PolicyVerdict v = verify_policy(complete_graph(2), empty_graph(2), 2, naive);
    ASSERT_FALSE(v.holds);
    ASSERT_EQ(v.counterexample.size(), 2U);
    EXPECT_EQ(format_round(1, v.counterexample[0]), "round 1: S G 0 | D H 0");
    EXPECT_EQ(format_round(2, v.counterexample[1]), "round 2: S G 1 | D H 1");
}

TEST(Policy, IsomorphismPolicyHolds)
{
    std::mt19937_64 rng(67);
    for (const Graph& g : enumerate_up_to_iso(5)) {
        const auto perm = shuffled(rng, g.order());
        IsomorphismPolicy p(perm);
        EXPECT_TRUE(verify_policy(g, g.permuted(perm), 3, p).holds);
    }
}

TEST(Policy, Errors)
{
    const InstanceBundle b = thm1_2_instance(1);
    EXPECT_THROW(paper_policy("thm3", {1}, b.left, b.right), PolicyError);
    EXPECT_THROW(paper_policy("thm1_2", {2}, b.left, b.right), PolicyError);
    EXPECT_THROW(paper_policy("thm2", {1, 2, 2, 2}, b.left, b.right), PolicyError);
}

TEST(Policy, AgreesWithSolverOnWrongRoundCounts)
{
    // One round too many: Spoiler wins, so no policy can hold.
    const InstanceBundle b = thm1_2_instance(1);
    auto policy = paper_policy("thm1_2", {1}, b.left, b.right);
    EXPECT_EQ(winner(b.left, b.right, 3), Player::spoiler);
    EXPECT_FALSE(verify_policy(b.left, b.right, 3, *policy).holds);
}

TEST(Transcript, Format)
{
    std::vector<Round> rounds{{{Side::left, 0}, 3}, {{Side::right, 2}, std::nullopt}};
    EXPECT_EQ(format_transcript(rounds, Player::spoiler),
              "round 1: S G 0 | D H 3\nround 2: S H 2 | D none\nwinner: spoiler\n");
}

TEST(Play, HumanSpoilerOnIsomorphicGraphs)
{
    std::istringstream in("G 0\nG 1\n");
    std::ostringstream out;
    PlayResult r = play_interactive(complete_graph(2), complete_graph(2), 2, Player::spoiler, in, out);
    ASSERT_TRUE(r.winner);
    EXPECT_EQ(*r.winner, Player::duplicator);
    EXPECT_EQ(r.rounds.size(), 2U);
    EXPECT_NE(out.str().find("winner: duplicator"), std::string::npos);
}

TEST(Play, HumanDuplicatorLoses)
{
    for (const char* script : {"0\n1\n", "1\n0\n"}) {
        std::istringstream in(script);
        std::ostringstream out;
        PlayResult r = play_interactive(complete_graph(2), empty_graph(2), 2, Player::duplicator, in, out);
        ASSERT_TRUE(r.winner);
        EXPECT_EQ(*r.winner, Player::spoiler);
    }
}

TEST(Play, IllegalInputReprompts)
{
    const Graph g = disjoint_union(path_graph(4), path_graph(2));
    std::istringstream in("99\nG 99\nX 1\nG\nG 1\nG 1\nH 3\n");
    std::ostringstream out;
    PlayResult r = play_interactive(g, path_graph(4), 2, Player::spoiler, in, out);
    ASSERT_TRUE(r.winner);
    EXPECT_EQ(r.rounds.size(), 2U);
    EXPECT_EQ(r.rounds[0].spoiler.vertex, 1);
    EXPECT_EQ(r.rounds[1].spoiler.side, Side::right);
    const std::string text = out.str();
    std::size_t prompts = 0;
    for (std::size_t p = text.find("illegal"); p != std::string::npos; p = text.find("illegal", p + 1))
        ++prompts;
    EXPECT_EQ(prompts, 5U);
    EXPECT_NE(text.find("round 1 spoiler> "), std::string::npos);
    EXPECT_EQ(*r.winner, Player::duplicator);
}

TEST(Play, ClosedInputAborts)
{
    std::istringstream in("G 0\n");
    std::ostringstream out;
    PlayResult r = play_interactive(cycle_graph(5), cycle_graph(5), 3, Player::spoiler, in, out);
    EXPECT_FALSE(r.winner);
    EXPECT_EQ(r.rounds.size(), 1U);
    EXPECT_NE(r.transcript.find("aborted"), std::string::npos);
}
