#pragma once

#include "efdepth/formula.hpp"
#include "efdepth/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace efdepth {

/// Partial map from variable names to vertices.
using Assignment = std::vector<std::pair<std::string, Vertex>>;

/// A formula with variables resolved to environment slots, reusable across graphs.
class CompiledFormula {
public:
    /// `free` lists the variables an assignment must provide, in slot order.
    explicit CompiledFormula(const Formula& f, std::vector<std::string> free = {}) : free_(std::move(free))
    {
        std::vector<std::string> scope = free_;
        root_ = compile(f, scope);
    }

    bool evaluate(const Graph& g, const std::vector<Vertex>& free_values = {}) const
    {
        if (free_values.size() != free_.size())
            throw FormulaError("expected " + std::to_string(free_.size()) + " free-variable values");
        std::vector<Vertex> env(free_values);
        env.resize(free_values.size() + static_cast<std::size_t>(max_depth_));
        for (Vertex v : free_values)
            if (v < 0 || v >= g.order())
                throw FormulaError("assigned vertex " + std::to_string(v) + " outside the graph");
        return eval(root_, g, env);
    }

private:
    struct Node {
        Op op{};
        int a = 0;
        int b = 0;
        std::vector<Node> kids;
    };

    Node compile(const Formula& f, std::vector<std::string>& scope)
    {
        Node node;
        node.op = f.op();
        auto slot = [&](const std::string& name) {
            for (std::size_t i = scope.size(); i-- > 0;)
                if (scope[i] == name)
                    return static_cast<int>(i);
            throw FormulaError("unbound variable '" + name + "'");
        };
        if (f.is_atom()) {
            node.a = slot(f.var());
            node.b = slot(f.rhs());
            return node;
        }
        if (f.is_quantifier()) {
            node.a = static_cast<int>(scope.size());
            scope.push_back(f.var());
            max_depth_ = std::max(max_depth_, static_cast<int>(scope.size() - free_.size()));
            node.kids.push_back(compile(f.body(), scope));
            scope.pop_back();
            return node;
        }
        for (const auto& k : f.operands())
            node.kids.push_back(compile(k, scope));
        return node;
    }

    static bool eval(const Node& n, const Graph& g, std::vector<Vertex>& env)
    {
        switch (n.op) {
        case Op::adjacent: return g.adjacent(env[n.a], env[n.b]);
        case Op::equal: return env[n.a] == env[n.b];
        case Op::negation: return !eval(n.kids[0], g, env);
        case Op::conjunction:
            for (const auto& k : n.kids)
                if (!eval(k, g, env))
                    return false;
            return true;
        case Op::disjunction:
            for (const auto& k : n.kids)
                if (eval(k, g, env))
                    return true;
            return false;
        case Op::implication: return !eval(n.kids[0], g, env) || eval(n.kids[1], g, env);
        case Op::exists:
            for (Vertex v = 0; v < g.order(); ++v) {
                env[n.a] = v;
                if (eval(n.kids[0], g, env))
                    return true;
            }
            return false;
        case Op::forall:
            for (Vertex v = 0; v < g.order(); ++v) {
                env[n.a] = v;
                if (!eval(n.kids[0], g, env))
                    return false;
            }
            return true;
        }
        return false;
    }

    std::vector<std::string> free_;
    int max_depth_ = 0;
    Node root_;
};

inline bool evaluate(const Formula& f, const Graph& g, const Assignment& env = {})
{
    std::vector<std::string> names;
    std::vector<Vertex> values;
    for (const auto& [name, v] : env) {
        names.push_back(name);
        values.push_back(v);
    }
    return CompiledFormula(f, std::move(names)).evaluate(g, values);
}

} // namespace efdepth
