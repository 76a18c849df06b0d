#include "fleetplan/planner/search.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "fleetplan/pddl/errors.hpp"
#include "fleetplan/pddl/parser.hpp"

namespace fleetplan::planner {

using pddl::Atom;
using pddl::Condition;
using pddl::Domain;
using pddl::FluentTerm;
using pddl::GroundAction;
using pddl::NumExpr;
using pddl::Problem;
using pddl::State;

namespace {

// Predicates never written by any action hold their init truth value forever.
std::unordered_set<std::string> static_predicates(const Domain& domain) {
    std::unordered_set<std::string> all;
    for (const auto& p : domain.predicates) all.insert(p.name);
    for (const auto& a : domain.actions) {
        for (const auto& atom : a.effect.add) all.erase(atom.predicate);
        for (const auto& atom : a.effect.del) all.erase(atom.predicate);
    }
    return all;
}

std::unordered_set<std::string> static_functions(const Domain& domain) {
    std::unordered_set<std::string> all;
    for (const auto& f : domain.functions) all.insert(f.name);
    for (const auto& a : domain.actions)
        for (const auto& ne : a.effect.numeric) all.erase(ne.target.function);
    return all;
}

bool expr_is_static(const NumExpr& e, const std::unordered_set<std::string>& static_fns) {
    switch (e.kind) {
        case NumExpr::Kind::Constant: return true;
        case NumExpr::Kind::Fluent: return static_fns.count(e.fluent.function) > 0;
        default: return expr_is_static(*e.lhs, static_fns) &&
                        expr_is_static(*e.rhs, static_fns);
    }
}

void collect_bindings(const Domain& domain, const Problem& problem,
                      const std::vector<pddl::TypedParam>& params, size_t index,
                      std::vector<std::string>& current,
                      std::vector<std::vector<std::string>>& out) {
    if (index == params.size()) {
        out.push_back(current);
        return;
    }
    for (const auto& obj : problem.objects) {
        if (!domain.is_subtype(obj.type, params[index].type)) continue;
        current.push_back(obj.name);
        collect_bindings(domain, problem, params, index + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<GroundAction> ground_all_actions(const Domain& domain,
                                             const Problem& problem) {
    const auto static_preds = static_predicates(domain);
    const auto static_fns = static_functions(domain);
    const State init = pddl::initial_state(problem);

    std::vector<GroundAction> out;
    for (const auto& schema : domain.actions) {
        std::vector<std::vector<std::string>> bindings;
        std::vector<std::string> current;
        collect_bindings(domain, problem, schema.params, 0, current, bindings);

        for (const auto& args : bindings) {
            GroundAction ga = pddl::ground_action(domain, problem, schema.name, args);

            bool statically_false = false;
            for (const auto& lit : ga.precondition.literals) {
                if (!static_preds.count(lit.atom.predicate)) continue;
                if (init.holds(lit.atom) == lit.negated) {
                    statically_false = true;
                    break;
                }
            }
            if (!statically_false) {
                for (const auto& cmp : ga.precondition.comparisons) {
                    if (!expr_is_static(cmp.lhs, static_fns) ||
                        !expr_is_static(cmp.rhs, static_fns))
                        continue;
                    try {
                        if (!pddl::satisfied(cmp, init)) {
                            statically_false = true;
                            break;
                        }
                    } catch (const pddl::MissingFluent&) {
                        statically_false = true;  // can never be evaluated
                        break;
                    }
                }
            }
            if (!statically_false) out.push_back(std::move(ga));
        }
    }
    return out;
}

double goal_count_normalizer(const std::vector<GroundAction>& actions,
                             const State& init) {
    double best = 0.0;
    for (const auto& ga : actions) {
        for (const auto& ne : ga.effect.numeric) {
            try {
                best = std::max(best, std::fabs(pddl::evaluate(ne.expr, init)));
            } catch (const pddl::Error&) {
                // expression reads a fluent that changes over time; skip
            }
        }
    }
    return best > 0.0 ? best : 1.0;
}

double heuristic_value(const State& state, const Condition& goal,
                       double step_normalizer) {
    double h = 0.0;
    for (const auto& lit : goal.literals)
        if (state.holds(lit.atom) == lit.negated) h += 1.0;
    for (const auto& cmp : goal.comparisons) {
        bool ok = false;
        double residual = 0.0;
        try {
            ok = pddl::satisfied(cmp, state);
            if (!ok) {
                double a = pddl::evaluate(cmp.lhs, state);
                double b = pddl::evaluate(cmp.rhs, state);
                residual = std::fabs(a - b);
            }
        } catch (const pddl::Error&) {
            ok = false;
            residual = step_normalizer;  // unevaluable counts as one full step
        }
        if (!ok) h += std::max(1.0, std::ceil(residual / step_normalizer));
    }
    return h;
}

PlanResult plan(const Domain& domain, const Problem& problem,
                const SearchConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto deadline =
        t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(config.timeout_seconds));

    const std::vector<GroundAction> actions = ground_all_actions(domain, problem);
    const State init = pddl::initial_state(problem);
    const double normalizer = goal_count_normalizer(actions, init);

    auto h_of = [&](const State& s) {
        return config.heuristic == Heuristic::Blind
                   ? 0.0
                   : heuristic_value(s, problem.goal, normalizer);
    };

    PlanResult result;
    if (pddl::satisfied(problem.goal, init)) {
        result.status = PlanStatus::Solved;
        return result;
    }

    struct Node {
        State state;
        size_t parent = SIZE_MAX;   // index into nodes
        size_t action = SIZE_MAX;   // index into actions
    };
    struct QueueEntry {
        double h;
        size_t seq;   // FIFO tie-break
        size_t node;
        bool operator>(const QueueEntry& o) const {
            if (h != o.h) return h > o.h;
            return seq > o.seq;
        }
    };

    std::vector<Node> nodes;
    nodes.push_back({init, SIZE_MAX, SIZE_MAX});
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>>
        open;
    std::unordered_set<std::string> seen;
    seen.insert(init.key());
    size_t seq = 0;
    open.push({h_of(init), seq++, 0});

    auto emit_plan = [&](size_t goal_node) {
        std::vector<size_t> action_chain;
        for (size_t n = goal_node; nodes[n].parent != SIZE_MAX; n = nodes[n].parent)
            action_chain.push_back(nodes[n].action);
        pddl::Plan plan_out;
        double t = 0.0;
        for (auto it = action_chain.rbegin(); it != action_chain.rend(); ++it) {
            plan_out.push_back({t, actions[*it]});
            t += 1.0;
        }
        return plan_out;
    };

    while (!open.empty()) {
        if (result.expansions >= config.max_expansions) {
            result.status = PlanStatus::BudgetExceeded;
            return result;
        }
        if (std::chrono::steady_clock::now() > deadline) {
            result.status = PlanStatus::TimedOut;
            return result;
        }

        const size_t node_index = open.top().node;
        open.pop();
        ++result.expansions;

        // Copy: nodes may reallocate while expanding.
        const State current = nodes[node_index].state;
        for (size_t ai = 0; ai < actions.size(); ++ai) {
            bool ok = false;
            try {
                ok = pddl::applicable(current, actions[ai]);
            } catch (const pddl::MissingFluent&) {
                ok = false;
            }
            if (!ok) continue;
            State next = pddl::apply(current, actions[ai]);
            std::string key = next.key();
            if (!seen.insert(std::move(key)).second) continue;
            nodes.push_back({std::move(next), node_index, ai});
            const size_t child = nodes.size() - 1;
            if (pddl::satisfied(problem.goal, nodes[child].state)) {
                result.status = PlanStatus::Solved;
                result.plan = emit_plan(child);
                return result;
            }
            open.push({h_of(nodes[child].state), seq++, child});
        }
    }

    result.status = PlanStatus::Unsolvable;
    return result;
}

}  // namespace fleetplan::planner
