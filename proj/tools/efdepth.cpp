#include "efdepth/efdepth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace efdepth;

enum Exit { ok = 0, negative = 1, usage = 2, verification_failed = 3, budget = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "-" is stdin, an existing path is read, anything else is the text itself.
std::string read_input(const std::string& arg)
{
    if (arg == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return arg;
}

Graph read_graph(const std::string& arg) { return decode_any(read_input(arg)); }

Formula read_formula(const std::string& arg) { return parse_formula(read_input(arg)); }

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

GraphFormat parse_format(const std::string& s)
{
    if (s == "graph6")
        return GraphFormat::graph6;
    if (s == "edgelist")
        return GraphFormat::edgelist;
    throw UsageError("unknown format '" + s + "' (graph6 or edgelist)");
}

std::string graph_line(const Graph& g, GraphFormat f) { return f == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edgelist(g); }

bool is_instance_name(const std::string& s)
{
    const auto& names = instance_names();
    return std::find(names.begin(), names.end(), s) != names.end();
}

struct Args {
    // shared
    std::string left, right, pattern, graph, formula, target, output, format = "graph6", name;
    int rounds = -1;
    int jobs = 1;
    std::uint64_t budget = SolverOptions{}.node_budget;
    // gen
    std::string what, part;
    std::vector<int> params;
    // synth
    std::string kind = "thm11";
    // ef
    std::string strategy;
    // verify-policy
    std::vector<std::string> instance;
    // play
    std::string role;
    // certify-upper / search-pair
    int max_n = -1;
    // bound
    bool complement = false;
    // suite
    std::string level = "core";
    std::string out_dir;
    std::uint64_t seed = SuiteOptions{}.seed;
    bool mutate_p0 = false;
    // check-cert
    std::string cert;
};

SolverOptions solver_options(const Args& a)
{
    SolverOptions o;
    o.node_budget = a.budget;
    o.jobs = a.jobs;
    return o;
}

int cmd_gen(const Args& a)
{
    const GraphFormat fmt = parse_format(a.format);
    if (is_instance_name(a.what)) {
        InstanceBundle b = gen_paper_instance(a.what, a.params);
        if (a.part == "pattern")
            write_output(a.output, graph_line(b.pattern, fmt));
        else if (a.part == "left")
            write_output(a.output, graph_line(b.left, fmt));
        else if (a.part == "right")
            write_output(a.output, graph_line(b.right, fmt));
        else if (a.part.empty()) {
            if (fmt != GraphFormat::graph6)
                throw UsageError("a whole bundle is printed in graph6; pick one graph with --part");
            write_output(a.output, "pattern " + to_graph6(b.pattern) + "\nleft " + to_graph6(b.left) + "\nright " +
                                       to_graph6(b.right) + "\nrounds " + std::to_string(b.rounds) + "\n");
        } else
            throw UsageError("--part must be pattern, left or right");
        return ok;
    }
    FamilySpec spec{parse_family(a.what), a.params};
    write_output(a.output, graph_line(generate(spec), fmt));
    return ok;
}

int cmd_encode(const Args& a)
{
    write_output(a.output, graph_line(read_graph(a.graph), parse_format(a.format)));
    return ok;
}

int cmd_eval(const Args& a)
{
    const bool v = evaluate(read_formula(a.formula), read_graph(a.graph));
    std::cout << (v ? "true" : "false") << "\n";
    return v ? ok : negative;
}

int cmd_depth(const Args& a)
{
    std::cout << quantifier_depth(read_formula(a.formula)) << "\n";
    return ok;
}

int cmd_synth(const Args& a)
{
    if (a.kind != "trivial" && a.kind != "thm11")
        throw UsageError("--kind must be thm11 or trivial");
    const Graph h = read_graph(a.target);
    Formula f = a.kind == "trivial" ? synth_trivial(h) : synth_thm11(h);
    write_output(a.output, to_string(f) + "\n");
    return ok;
}

int cmd_ef(const Args& a)
{
    SolverOptions o = solver_options(a);
    o.record_strategy = !a.strategy.empty();
    GameOutcome out = solve(read_graph(a.left), read_graph(a.right), a.rounds, o);
    std::cout << player_name(out.winner) << "\n";
    std::cerr << "nodes: " << out.nodes << "\n";
    if (out.strategy) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [k, v] : *out.strategy)
            j[k] = v;
        write_output(a.strategy, j.dump(2) + "\n");
    }
    return ok;
}

int cmd_verify_policy(const Args& a)
{
    if (a.instance.empty())
        throw UsageError("--instance needs a bundle name and its parameters");
    std::vector<int> params;
    for (std::size_t i = 1; i < a.instance.size(); ++i)
        params.push_back(std::stoi(a.instance[i]));
    InstanceBundle b = gen_paper_instance(a.instance[0], params);
    auto policy = paper_policy(a.name, params, b.left, b.right);
    const int rounds = a.rounds >= 0 ? a.rounds : b.rounds;
    PolicyVerdict v = verify_policy(b.left, b.right, rounds, *policy);
    if (v.holds) {
        std::cout << "holds\n";
        std::cerr << "lines checked: " << v.lines << "\n";
        return ok;
    }
    std::cout << "fails\n";
    for (std::size_t t = 0; t < v.counterexample.size(); ++t)
        std::cout << format_round(static_cast<int>(t + 1), v.counterexample[t]) << "\n";
    return verification_failed;
}

int cmd_distinguish(const Args& a)
{
    try {
        std::cout << to_string(extract_distinguishing(read_graph(a.left), read_graph(a.right), a.rounds,
                                                      solver_options(a)))
                  << "\n";
        return ok;
    } catch (const NoSpoilerWin& e) {
        std::cerr << e.what() << "\n";
        return negative;
    }
}

int cmd_play(const Args& a)
{
    if (a.role != "spoiler" && a.role != "duplicator")
        throw UsageError("--as must be spoiler or duplicator");
    const Player human = a.role == "spoiler" ? Player::spoiler : Player::duplicator;
    PlayResult r = play_interactive(read_graph(a.left), read_graph(a.right), a.rounds, human, std::cin, std::cout,
                                    solver_options(a));
    return r.winner ? ok : negative;
}

int cmd_certify_lower(const Args& a)
{
    LowerResult r = certify_lower(read_graph(a.pattern), read_graph(a.left), read_graph(a.right), a.rounds,
                                  solver_options(a));
    write_output(a.output, to_json(r.certificate).dump(2) + "\n");
    for (LowerRejection why : r.rejections)
        std::cerr << "rejected: " << rejection_name(why) << "\n";
    if (r.certificate.verified)
        return ok;
    const bool out_of_budget = std::find(r.rejections.begin(), r.rejections.end(), LowerRejection::budget_exceeded) !=
                               r.rejections.end();
    return out_of_budget ? budget : verification_failed;
}

int cmd_certify_upper(const Args& a)
{
    UpperResult r = certify_upper(read_graph(a.pattern), read_formula(a.formula), a.max_n);
    write_output(a.output, to_json(r.certificate).dump(2) + "\n");
    std::cerr << "note: " << r.note << "\n";
    std::cerr << "graphs checked: " << r.graphs_checked << "\n";
    if (r.counterexample) {
        std::cerr << "counterexample: " << to_graph6(*r.counterexample) << "\n";
        return verification_failed;
    }
    return ok;
}

int cmd_check_cert(const Args& a)
{
    const BoundCertificate c = certificate_from_json(nlohmann::json::parse(read_input(a.cert)));
    CertificateCheck check = check_certificate(c, solver_options(a));
    std::cout << (check.ok ? "valid" : "invalid") << "\n";
    std::cerr << check.detail << "\n";
    return check.ok ? ok : verification_failed;
}

int cmd_bound(const Args& a)
{
    std::cout << general_lower_bound(read_graph(a.pattern), a.complement).integer_bound << "\n";
    return ok;
}

int cmd_search_pair(const Args& a)
{
    SearchResult r = search_pair(read_graph(a.pattern), a.rounds, a.max_n, a.budget);
    std::cerr << "pairs solved: " << r.pairs_solved << ", nodes: " << r.nodes << "\n";
    if (r.certificate) {
        write_output(a.output, to_json(*r.certificate).dump(2) + "\n");
        return ok;
    }
    std::cout << "none\n";
    if (r.budget_exhausted) {
        std::cerr << "budget exhausted\n";
        return budget;
    }
    return negative;
}

int cmd_suite(const Args& a)
{
    SuiteOptions o;
    if (a.level == "core")
        o.level = SuiteLevel::core;
    else if (a.level == "extended")
        o.level = SuiteLevel::extended;
    else
        throw UsageError("--level must be core or extended");
    if (!a.out_dir.empty())
        o.out_dir = a.out_dir;
    o.jobs = a.jobs;
    o.seed = a.seed;
    if (a.mutate_p0)
        o.mutation = Thm11Mutation::drop_p0_nonadjacency;
    SuiteReport report = run_paper_suite(o, [](const SuiteRow& row) { std::cout << format_row(row) << std::endl; });
    std::cout << "suite: " << (report.passed() ? "pass" : "fail") << "\n";
    return report.passed() ? ok : verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantifier depth of induced-subgraph properties: graphs, formulas, EF games, certificates"};
    app.require_subcommand(1);
    Args a;

    auto add_graph_pair = [&](CLI::App* s) {
        s->add_option("--left", a.left, "graph G (graph6/edge list file, '-' for stdin, or inline)")->required();
        s->add_option("--right", a.right, "graph H")->required();
        s->add_option("--rounds", a.rounds, "number of rounds")->required()->check(CLI::NonNegativeNumber);
    };
    auto add_solver = [&](CLI::App* s) {
        s->add_option("--budget", a.budget, "node budget for the game solver");
        s->add_option("--jobs", a.jobs, "solver worker threads")->check(CLI::PositiveNumber);
    };

    std::map<CLI::App*, int (*)(const Args&)> handlers;

    auto* gen = app.add_subcommand("gen", "generate a family graph or a registry bundle");
    gen->add_option("what", a.what, "family (path, cycle, complete, empty, multipartite, almost) or bundle name")
        ->required();
    gen->add_option("params", a.params, "integer parameters");
    gen->add_option("-o,--output", a.output, "output file");
    gen->add_option("--format", a.format, "graph6 or edgelist");
    gen->add_option("--part", a.part, "for bundles: pattern, left or right");
    handlers[gen] = cmd_gen;

    auto* enc = app.add_subcommand("encode", "re-encode a graph");
    enc->add_option("--graph,graph", a.graph, "input graph")->required();
    enc->add_option("--format,--to", a.format, "graph6 or edgelist");
    enc->add_option("-o,--output", a.output, "output file");
    handlers[enc] = cmd_encode;

    auto* ev = app.add_subcommand("eval", "evaluate a sentence on a graph");
    ev->add_option("--formula", a.formula, "sentence")->required();
    ev->add_option("--graph", a.graph, "graph")->required();
    handlers[ev] = cmd_eval;

    auto* dp = app.add_subcommand("depth", "quantifier depth of a formula");
    dp->add_option("--formula", a.formula, "formula")->required();
    handlers[dp] = cmd_depth;

    auto* sy = app.add_subcommand("synth", "synthesize the depth v(H)+3 sentence for P3+K1+H");
    sy->add_option("--target", a.target, "graph H (or F with --kind trivial)")->required();
    sy->add_option("--kind", a.kind, "thm11 or trivial");
    sy->add_option("-o,--output", a.output, "output file");
    handlers[sy] = cmd_synth;

    auto* ef = app.add_subcommand("ef", "solve the EF game");
    add_graph_pair(ef);
    add_solver(ef);
    ef->add_option("--strategy", a.strategy, "write the strategy table as JSON");
    handlers[ef] = cmd_ef;

    auto* vp = app.add_subcommand("verify-policy", "check a scripted Duplicator policy against all Spoiler lines");
    vp->add_option("--name", a.name, "thm2 or thm1_2")->required();
    vp->add_option("--instance", a.instance, "bundle name followed by its parameters")->required()->expected(1, -1);
    vp->add_option("--rounds", a.rounds, "override the bundle's round count");
    handlers[vp] = cmd_verify_policy;

    auto* di = app.add_subcommand("distinguish", "sentence true on G and false on H");
    add_graph_pair(di);
    add_solver(di);
    handlers[di] = cmd_distinguish;

    auto* pl = app.add_subcommand("play", "play the game against the solver on stdin/stdout");
    add_graph_pair(pl);
    add_solver(pl);
    pl->add_option("--as", a.role, "spoiler or duplicator")->required();
    handlers[pl] = cmd_play;

    auto* cl = app.add_subcommand("certify-lower", "certify D[F] >= r+1 from (G, H, r)");
    cl->add_option("--pattern", a.pattern, "pattern F")->required();
    add_graph_pair(cl);
    add_solver(cl);
    cl->add_option("-o,--output", a.output, "certificate file");
    handlers[cl] = cmd_certify_lower;

    auto* cu = app.add_subcommand("certify-upper", "check that a sentence expresses C[F] up to n vertices");
    cu->add_option("--pattern", a.pattern, "pattern F")->required();
    cu->add_option("--formula", a.formula, "sentence")->required();
    cu->add_option("--max-n", a.max_n, "largest graph order checked (<= 7)")->required()->check(CLI::Range(0, 7));
    cu->add_option("-o,--output", a.output, "certificate file");
    handlers[cu] = cmd_certify_upper;

    auto* cc = app.add_subcommand("check-cert", "recompute a certificate file");
    cc->add_option("--cert,cert", a.cert, "certificate JSON")->required();
    add_solver(cc);
    handlers[cc] = cmd_check_cert;

    auto* bd = app.add_subcommand("bound", "closed-form lower bound on D[F]");
    bd->add_option("--pattern", a.pattern, "pattern F")->required();
    bd->add_flag("--complement", a.complement, "also use the complement of F");
    handlers[bd] = cmd_bound;

    auto* sp = app.add_subcommand("search-pair", "search small graphs for a lower-bound certificate");
    sp->add_option("--pattern", a.pattern, "pattern F")->required();
    sp->add_option("--rounds", a.rounds, "rounds r")->required()->check(CLI::NonNegativeNumber);
    sp->add_option("--max-n", a.max_n, "largest representative order (<= 7)")->required()->check(CLI::Range(0, 7));
    sp->add_option("--budget", a.budget, "total solver nodes")->required();
    sp->add_option("-o,--output", a.output, "certificate file");
    handlers[sp] = cmd_search_pair;

    auto* su = app.add_subcommand("suite", "run the reproduction suite");
    su->add_option("--level", a.level, "core or extended");
    su->add_option("--out", a.out_dir, "directory for certificates and failure artifacts");
    su->add_option("--jobs", a.jobs, "solver worker threads")->check(CLI::PositiveNumber);
    su->add_option("--seed", a.seed, "seed for the randomized battery");
    su->add_flag("--mutate-p0", a.mutate_p0, "sabotage one literal of P0 (the suite must then fail)");
    handlers[su] = cmd_suite;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        const auto subs = app.get_subcommands();
        std::cerr << (subs.empty() ? app.help() : subs.front()->help());
        return usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        return handlers.at(sub)(a);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << sub->help();
        return usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const FormulaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
