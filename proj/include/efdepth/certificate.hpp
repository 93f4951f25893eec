#pragma once

#include "efdepth/canonical.hpp"
#include "efdepth/eval.hpp"
#include "efdepth/formula.hpp"
#include "efdepth/induced.hpp"
#include "efdepth/io.hpp"
#include "efdepth/parser.hpp"
#include "efdepth/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace efdepth {

inline constexpr const char* kToolVersion = "efdepth 0.1.0";

enum class CertificateKind { lower, upper };

/// Evidence for D[F] >= b (lower) or for "phi expresses C[F] on all graphs with
/// at most n_max vertices" (upper). Holds no strategy; checking recomputes.
struct BoundCertificate {
    CertificateKind kind = CertificateKind::lower;
    std::string pattern;
    std::optional<std::string> left;
    std::optional<std::string> right;
    std::optional<int> rounds;
    std::optional<int> claimed_bound;
    std::optional<std::string> formula;
    std::optional<int> depth;
    std::optional<int> n_max;
    bool verified = false;
    std::string tool_version = kToolVersion;
};

inline nlohmann::ordered_json to_json(const BoundCertificate& c)
{
    nlohmann::ordered_json j;
    j["kind"] = c.kind == CertificateKind::lower ? "lower" : "upper";
    j["pattern"] = c.pattern;
    if (c.left)
        j["left"] = *c.left;
    if (c.right)
        j["right"] = *c.right;
    if (c.rounds)
        j["rounds"] = *c.rounds;
    if (c.claimed_bound)
        j["claimed_bound"] = *c.claimed_bound;
    if (c.formula)
        j["formula"] = *c.formula;
    if (c.depth)
        j["depth"] = *c.depth;
    if (c.n_max)
        j["n_max"] = *c.n_max;
    j["verified"] = c.verified;
    j["tool_version"] = c.tool_version;
    return j;
}

inline BoundCertificate certificate_from_json(const nlohmann::json& j)
{
    BoundCertificate c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "lower" && kind != "upper")
        throw std::invalid_argument("certificate kind must be 'lower' or 'upper'");
    c.kind = kind == "lower" ? CertificateKind::lower : CertificateKind::upper;
    c.pattern = j.at("pattern").get<std::string>();
    auto opt_str = [&](const char* key, std::optional<std::string>& out) {
        if (j.contains(key))
            out = j.at(key).get<std::string>();
    };
    auto opt_int = [&](const char* key, std::optional<int>& out) {
        if (j.contains(key))
            out = j.at(key).get<int>();
    };
    opt_str("left", c.left);
    opt_str("right", c.right);
    opt_int("rounds", c.rounds);
    opt_int("claimed_bound", c.claimed_bound);
    opt_str("formula", c.formula);
    opt_int("depth", c.depth);
    opt_int("n_max", c.n_max);
    c.verified = j.value("verified", false);
    c.tool_version = j.value("tool_version", std::string());
    return c;
}

inline const char* kLowerRejectionNames[] = {"F-in-H", "F-not-in-G", "Spoiler-wins", "solver-budget-exceeded"};

enum class LowerRejection { f_in_h, f_not_in_g, spoiler_wins, budget_exceeded };

inline const char* rejection_name(LowerRejection r) { return kLowerRejectionNames[static_cast<int>(r)]; }

struct LowerResult {
    BoundCertificate certificate;
    std::vector<LowerRejection> rejections;
    std::uint64_t nodes = 0;
};

/// D[F] >= r+1 holds if F is induced in G, not in H, and Duplicator wins the
/// r-round game on (G, H). The solver runs only when both containment checks pass.
inline LowerResult certify_lower(const Graph& f, const Graph& g, const Graph& h, int rounds, SolverOptions opts = {})
{
    LowerResult out;
    BoundCertificate& c = out.certificate;
    c.kind = CertificateKind::lower;
    c.pattern = to_graph6(f);
    c.left = to_graph6(g);
    c.right = to_graph6(h);
    c.rounds = rounds;
    c.claimed_bound = rounds + 1;

    if (!contains_induced(g, f))
        out.rejections.push_back(LowerRejection::f_not_in_g);
    if (contains_induced(h, f))
        out.rejections.push_back(LowerRejection::f_in_h);
    if (out.rejections.empty()) {
        try {
            GameOutcome game = solve(g, h, rounds, opts);
            out.nodes = game.nodes;
            if (game.winner == Player::spoiler)
                out.rejections.push_back(LowerRejection::spoiler_wins);
        } catch (const BudgetExceeded&) {
            out.rejections.push_back(LowerRejection::budget_exceeded);
        }
    }
    c.verified = out.rejections.empty();
    return out;
}

inline constexpr const char* kUpperNote =
    "instance verification only: the formula agrees with the induced-subgraph test on every graph up to n_max "
    "vertices; this is not a proof for all graphs";

struct UpperResult {
    BoundCertificate certificate;
    std::optional<Graph> counterexample;
    std::size_t graphs_checked = 0;
    std::string note = kUpperNote;
};

/// Checks that `phi` holds on exactly the graphs containing F, over every
/// isomorphism class with at most n_max vertices (n_max <= 7).
inline UpperResult certify_upper(const Graph& f, const Formula& phi, int n_max)
{
    if (n_max < 0 || n_max > kEnumerateMaxVertices)
        throw std::invalid_argument("n_max must lie in 0.." + std::to_string(kEnumerateMaxVertices));
    check_well_scoped(phi);

    UpperResult out;
    BoundCertificate& c = out.certificate;
    c.kind = CertificateKind::upper;
    c.pattern = to_graph6(f);
    c.formula = to_string(phi);
    c.depth = quantifier_depth(phi);
    c.n_max = n_max;

    CompiledFormula compiled(phi, {});
    for (int n = 0; n <= n_max && !out.counterexample; ++n) {
        for (const Graph& g : enumerate_up_to_iso(n)) {
            ++out.graphs_checked;
            if (compiled.evaluate(g, {}) != static_cast<bool>(contains_induced(g, f))) {
                out.counterexample = g;
                break;
            }
        }
    }
    c.verified = !out.counterexample;
    return out;
}

struct CertificateCheck {
    bool ok = false;
    std::string detail;
};

/// Recomputes a certificate from its stored fields.
inline CertificateCheck check_certificate(const BoundCertificate& c, SolverOptions opts = {})
{
    const Graph f = from_graph6(c.pattern);
    if (c.kind == CertificateKind::lower) {
        if (!c.left || !c.right || !c.rounds)
            return {false, "lower certificate lacks left, right or rounds"};
        if (c.claimed_bound && *c.claimed_bound != *c.rounds + 1)
            return {false, "claimed_bound must equal rounds + 1"};
        LowerResult r = certify_lower(f, from_graph6(*c.left), from_graph6(*c.right), *c.rounds, opts);
        if (!r.certificate.verified)
            return {false, std::string("rejected: ") + rejection_name(r.rejections.front())};
        return {true, "lower bound " + std::to_string(*c.rounds + 1) + " re-verified"};
    }
    if (!c.formula || !c.n_max)
        return {false, "upper certificate lacks formula or n_max"};
    const Formula phi = parse_formula(*c.formula);
    if (c.depth && *c.depth != quantifier_depth(phi))
        return {false, "stated depth " + std::to_string(*c.depth) + " differs from formula depth " +
                           std::to_string(quantifier_depth(phi))};
    UpperResult r = certify_upper(f, phi, *c.n_max);
    if (!r.certificate.verified)
        return {false, "counterexample " + to_graph6(*r.counterexample)};
    return {true, std::string("re-verified; ") + kUpperNote};
}

} // namespace efdepth
