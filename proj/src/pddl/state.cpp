#include "fleetplan/pddl/state.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "fleetplan/pddl/errors.hpp"
#include "fleetplan/pddl/print.hpp"

namespace fleetplan::pddl {

namespace {

std::string term_to_string(const FluentTerm& ft) {
    std::string out = "(" + ft.function;
    for (const auto& a : ft.args) out += " " + a;
    return out + ")";
}

}  // namespace

std::string State::key() const {
    std::ostringstream os;
    for (const auto& a : atoms) {
        os << a.predicate;
        for (const auto& arg : a.args) os << ' ' << arg;
        os << '|';
    }
    os << '#';
    for (const auto& [ft, value] : fluents)
        os << term_to_string(ft) << '=' << number_to_string(value) << '|';
    return os.str();
}

State initial_state(const Problem& problem) {
    State s;
    s.atoms.insert(problem.init_atoms.begin(), problem.init_atoms.end());
    s.fluents = problem.init_fluents;
    return s;
}

double evaluate(const NumExpr& expr, const State& state) {
    switch (expr.kind) {
        case NumExpr::Kind::Constant:
            return expr.constant;
        case NumExpr::Kind::Fluent: {
            auto it = state.fluents.find(expr.fluent);
            if (it == state.fluents.end())
                throw MissingFluent(term_to_string(expr.fluent));
            return it->second;
        }
        case NumExpr::Kind::Add:
            return evaluate(*expr.lhs, state) + evaluate(*expr.rhs, state);
        case NumExpr::Kind::Subtract:
            return evaluate(*expr.lhs, state) - evaluate(*expr.rhs, state);
        case NumExpr::Kind::Multiply:
            return evaluate(*expr.lhs, state) * evaluate(*expr.rhs, state);
        case NumExpr::Kind::Divide: {
            double denom = evaluate(*expr.rhs, state);
            if (std::fabs(denom) < kNumericEps)
                throw Error("division by zero in numeric expression");
            return evaluate(*expr.lhs, state) / denom;
        }
    }
    throw Error("unreachable numeric expression kind");
}

bool satisfied(const NumericComparison& cmp, const State& state) {
    double a = evaluate(cmp.lhs, state);
    double b = evaluate(cmp.rhs, state);
    switch (cmp.op) {
        case NumericComparison::Op::Ge: return a >= b - kNumericEps;
        case NumericComparison::Op::Gt: return a > b + kNumericEps;
        case NumericComparison::Op::Eq: return std::fabs(a - b) <= kNumericEps;
        case NumericComparison::Op::Le: return a <= b + kNumericEps;
        case NumericComparison::Op::Lt: return a < b - kNumericEps;
    }
    return false;
}

bool satisfied(const Condition& cond, const State& state) {
    for (const auto& lit : cond.literals)
        if (state.holds(lit.atom) == lit.negated) return false;
    for (const auto& cmp : cond.comparisons)
        if (!satisfied(cmp, state)) return false;
    return true;
}

double satisfied_fraction(const Condition& cond, const State& state) {
    size_t total = cond.literals.size() + cond.comparisons.size();
    if (total == 0) return 1.0;
    size_t hit = 0;
    for (const auto& lit : cond.literals)
        if (state.holds(lit.atom) != lit.negated) ++hit;
    for (const auto& cmp : cond.comparisons)
        if (satisfied(cmp, state)) ++hit;
    return static_cast<double>(hit) / static_cast<double>(total);
}

bool applicable(const State& state, const GroundAction& action) {
    return satisfied(action.precondition, state);
}

State apply(const State& state, const GroundAction& action) {
    if (!applicable(state, action)) throw NotApplicable(action.signature());

    // All numeric updates read pre-state values.
    std::vector<std::pair<FluentTerm, double>> updates;
    updates.reserve(action.effect.numeric.size());
    for (const auto& ne : action.effect.numeric) {
        double delta = evaluate(ne.expr, state);
        double next = 0.0;
        switch (ne.kind) {
            case NumericEffect::Kind::Assign:
                next = delta;
                break;
            case NumericEffect::Kind::Increase: {
                auto it = state.fluents.find(ne.target);
                if (it == state.fluents.end())
                    throw MissingFluent(term_to_string(ne.target));
                next = it->second + delta;
                break;
            }
            case NumericEffect::Kind::Decrease: {
                auto it = state.fluents.find(ne.target);
                if (it == state.fluents.end())
                    throw MissingFluent(term_to_string(ne.target));
                next = it->second - delta;
                break;
            }
        }
        updates.emplace_back(ne.target, next);
    }

    State out = state;
    for (const auto& atom : action.effect.del) out.atoms.erase(atom);
    for (const auto& atom : action.effect.add) out.atoms.insert(atom);
    for (auto& [target, value] : updates) out.fluents[target] = value;
    return out;
}

}  // namespace fleetplan::pddl
