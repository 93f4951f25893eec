#pragma once

#include "efdepth/families.hpp"
#include "efdepth/game.hpp"
#include "efdepth/graph.hpp"
#include "efdepth/instances.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace efdepth {

/// What a policy sees when asked for a reply.
struct GameView {
    const Graph& left;
    const Graph& right;
    const Configuration& config;
    /// 1-based number of the round being played.
    int round;
    int rounds;

    const Graph& graph(Side s) const { return s == Side::left ? left : right; }
};

/// Deterministic Duplicator rule with internal state. Policies are cloned at each
/// branch point of an exhaustive verification.
class DuplicatorPolicy {
public:
    virtual ~DuplicatorPolicy() = default;
    virtual std::string name() const = 0;
    /// Vertex on the opposite side of `m`, or nothing if the policy has no answer.
    virtual std::optional<Vertex> respond(const GameView& view, Move m) = 0;
    virtual std::unique_ptr<DuplicatorPolicy> clone() const = 0;
};

class PolicyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Always answers with the lowest unchosen vertex.
class LowestFreePolicy final : public DuplicatorPolicy {
public:
    std::string name() const override { return "lowest-free"; }

    std::optional<Vertex> respond(const GameView& view, Move m) override
    {
        const Side s = other(m.side);
        const VertexSet free = view.graph(s).all() & ~view.config.used(s);
        if (!free)
            return std::nullopt;
        return static_cast<Vertex>(std::countr_zero(free));
    }

    std::unique_ptr<DuplicatorPolicy> clone() const override { return std::make_unique<LowestFreePolicy>(*this); }
};

/// Answers through a fixed isomorphism left -> right.
class IsomorphismPolicy final : public DuplicatorPolicy {
public:
    explicit IsomorphismPolicy(std::vector<Vertex> forward) : forward_(std::move(forward))
    {
        inverse_.assign(forward_.size(), -1);
        for (std::size_t v = 0; v < forward_.size(); ++v)
            inverse_[forward_[v]] = static_cast<Vertex>(v);
    }

    std::string name() const override { return "isomorphism"; }

    std::optional<Vertex> respond(const GameView&, Move m) override
    {
        return m.side == Side::left ? forward_[m.vertex] : inverse_[m.vertex];
    }

    std::unique_ptr<DuplicatorPolicy> clone() const override { return std::make_unique<IsomorphismPolicy>(*this); }

private:
    std::vector<Vertex> forward_;
    std::vector<Vertex> inverse_;
};

/// Class-map strategy on (G^m_{l,k}, G^m_{l-1,k}). Part and component are copied;
/// the class goes through a partial injection f from left classes to right
/// classes, extended with the lowest class unused on the reply side whenever
/// Spoiler opens a class.
class AlmostMultipartitePolicy final : public DuplicatorPolicy {
public:
    AlmostMultipartitePolicy(int l, int k) : l_(l), k_(k) {}

    std::string name() const override { return "thm2"; }

    std::optional<Vertex> respond(const GameView&, Move mv) override
    {
        const bool from_left = mv.side == Side::left;
        const int from_l = from_left ? l_ : l_ - 1;
        const int to_l = from_left ? l_ - 1 : l_;
        auto t = almost_multipartite_coords(from_l, k_, mv.vertex);
        auto& map = from_left ? forward_ : backward_;
        int cls;
        if (auto it = map.find(t.cls); it != map.end()) {
            cls = it->second;
        } else {
            auto& image = from_left ? backward_ : forward_;
            cls = -1;
            for (int c = 0; c < to_l; ++c)
                if (!image.contains(c)) {
                    cls = c;
                    break;
                }
            if (cls < 0)
                return std::nullopt;
            map[t.cls] = cls;
            image[cls] = t.cls;
        }
        return almost_multipartite_index(to_l, k_, {cls, t.part, t.component});
    }

    std::unique_ptr<DuplicatorPolicy> clone() const override
    {
        return std::make_unique<AlmostMultipartitePolicy>(*this);
    }

    /// Current class map, left class -> right class.
    const std::map<int, int>& class_map() const { return forward_; }

private:
    int l_, k_;
    std::map<int, int> forward_;
    std::map<int, int> backward_;
};

/// Strategy on (P4 + mP2, P4 + (m-1)P2). B = {0,1,2,3} is the P4 and
/// A_s = {4+2s, 5+2s} the s-th matching edge.
///
/// Before the last round it keeps two invariants: a chosen vertex lies in B iff
/// its partner is the identical vertex, and two chosen vertices share an A-block
/// iff their partners do. When no reply keeps them (Spoiler opens the one A-block
/// the other side lacks), it answers with a vertex of B whose adjacency to the
/// chosen vertices matches, endpoints 0 and 3 first. In the last round it plays
/// the lowest vertex whose adjacency to the chosen vertices matches.
class MatchingPathPolicy final : public DuplicatorPolicy {
public:
    std::string name() const override { return "thm1_2"; }

    std::optional<Vertex> respond(const GameView& view, Move mv) override
    {
        const Side to = other(mv.side);
        const VertexSet matching = matching_replies(view.left, view.right, view.config, mv);
        if (view.round >= view.rounds) {
            if (!matching)
                return std::nullopt;
            return static_cast<Vertex>(std::countr_zero(matching));
        }
        if (auto r = keep_invariants(view, mv, to); r && (matching & bit(*r)))
            return r;
        for (Vertex b : {0, 3, 1, 2})
            if (b < view.graph(to).order() && (matching & bit(b)))
                return b;
        if (!matching)
            return std::nullopt;
        return static_cast<Vertex>(std::countr_zero(matching));
    }

    std::unique_ptr<DuplicatorPolicy> clone() const override { return std::make_unique<MatchingPathPolicy>(*this); }

private:
    static bool in_b(Vertex v) { return v < 4; }
    static int block(Vertex v) { return (v - 4) / 2; }

    std::optional<Vertex> keep_invariants(const GameView& view, Move mv, Side to) const
    {
        const Configuration& c = view.config;
        const Graph& target = view.graph(to);
        if (in_b(mv.vertex)) {
            if (mv.vertex < target.order() && !c.is_used(to, mv.vertex))
                return mv.vertex;
            return std::nullopt;
        }
        // Spoiler's block already touched: mirror into the partner's block.
        const int s = block(mv.vertex);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Vertex mine = c.at(i, mv.side);
            if (in_b(mine) || block(mine) != s)
                continue;
            const Vertex theirs = c.at(i, to);
            if (in_b(theirs))
                return std::nullopt;
            const Vertex mate = theirs ^ 1; // blocks are {even, odd} pairs starting at 4
            if (c.is_used(to, mate))
                return std::nullopt;
            return mate;
        }
        // Fresh block: answer in the lowest untouched block on the other side.
        const int blocks = (target.order() - 4) / 2;
        for (int t = 0; t < blocks; ++t) {
            const Vertex a = 4 + 2 * t;
            if (!c.is_used(to, a) && !c.is_used(to, a + 1))
                return a;
        }
        return std::nullopt;
    }
};

/// Builds a scripted policy for its bundle and checks that (left, right) match it.
inline std::unique_ptr<DuplicatorPolicy> paper_policy(const std::string& name, const std::vector<int>& params,
                                                      const Graph& left, const Graph& right)
{
    if (name == "thm2") {
        InstanceBundle b = gen_paper_instance("thm2", params);
        if (!(b.left == left && b.right == right))
            throw PolicyError("thm2 policy: graphs do not match G^m_{l,k} / G^m_{l-1,k} for these parameters");
        const int l = b.left.order() / (params[0] * params[1]);
        return std::make_unique<AlmostMultipartitePolicy>(l, params[1]);
    }
    if (name == "thm1_2") {
        InstanceBundle b = gen_paper_instance("thm1_2", params);
        if (!(b.left == left && b.right == right))
            throw PolicyError("thm1_2 policy: graphs do not match P4+mP2 / P4+(m-1)P2");
        return std::make_unique<MatchingPathPolicy>();
    }
    throw PolicyError("unknown policy '" + name + "'");
}

struct PolicyVerdict {
    bool holds = true;
    /// Full move sequence of the first failing line of play.
    std::vector<Round> counterexample;
    std::uint64_t lines = 0;
};

namespace detail {

inline bool verify_branch(const Graph& g, const Graph& h, int rounds, Configuration& c,
                          const DuplicatorPolicy& policy, std::vector<Round>& trail, PolicyVerdict& verdict)
{
    const int round = static_cast<int>(c.size()) + 1;
    if (round > rounds || (c.used(Side::left) == g.all() && c.used(Side::right) == h.all())) {
        ++verdict.lines;
        return true;
    }
    for (Side s : {Side::left, Side::right}) {
        const Graph& from = s == Side::left ? g : h;
        const Graph& to = s == Side::left ? h : g;
        VertexSet free = from.all() & ~c.used(s);
        while (free) {
            const Vertex v = static_cast<Vertex>(std::countr_zero(free));
            free &= free - 1;
            auto mine = policy.clone();
            GameView view{g, h, c, round, rounds};
            std::optional<Vertex> reply = mine->respond(view, {s, v});
            trail.push_back({{s, v}, reply});
            const Side rs = other(s);
            if (!reply || *reply < 0 || *reply >= to.order() || c.is_used(rs, *reply)) {
                verdict.holds = false;
                verdict.counterexample = trail;
                return false;
            }
            if (s == Side::left)
                c.push(v, *reply);
            else
                c.push(*reply, v);
            const bool ok = partial_iso_check(g, h, c) && verify_branch(g, h, rounds, c, *mine, trail, verdict);
            if (!ok && verdict.holds) {
                verdict.holds = false;
                verdict.counterexample = trail;
            }
            c.pop();
            trail.pop_back();
            if (!ok)
                return false;
        }
    }
    return true;
}

} // namespace detail

/// Plays the policy against every legal Spoiler line of the r-round game.
inline PolicyVerdict verify_policy(const Graph& left, const Graph& right, int rounds, const DuplicatorPolicy& policy)
{
    PolicyVerdict verdict;
    Configuration c;
    std::vector<Round> trail;
    detail::verify_branch(left, right, rounds, c, policy, trail, verdict);
    return verdict;
}

} // namespace efdepth
