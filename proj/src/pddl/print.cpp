#include "fleetplan/pddl/print.hpp"

#include <charconv>
#include <sstream>

namespace fleetplan::pddl {

std::string number_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string timestamp_to_string(double v) {
    std::string s = number_to_string(v);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

namespace {

void print_typed_list(std::ostringstream& os, const std::vector<TypedParam>& items,
                      bool variables) {
    // Group consecutive entries sharing a type: "a b - t c - u".
    for (size_t i = 0; i < items.size();) {
        size_t j = i;
        while (j < items.size() && items[j].type == items[i].type) ++j;
        for (size_t k = i; k < j; ++k) {
            if (k > 0) os << ' ';
            os << (variables ? "?" : "") << items[k].name;
        }
        os << " - " << items[i].type;
        if (j < items.size()) os << ' ';
        i = j;
    }
}

void print_atom(std::ostringstream& os, const Atom& atom) {
    os << '(' << atom.predicate;
    for (const auto& a : atom.args) os << ' ' << a;
    os << ')';
}

void print_fluent(std::ostringstream& os, const FluentTerm& ft) {
    os << '(' << ft.function;
    for (const auto& a : ft.args) os << ' ' << a;
    os << ')';
}

void print_expr(std::ostringstream& os, const NumExpr& e) {
    switch (e.kind) {
        case NumExpr::Kind::Constant: os << number_to_string(e.constant); return;
        case NumExpr::Kind::Fluent: print_fluent(os, e.fluent); return;
        case NumExpr::Kind::Add: os << "(+ "; break;
        case NumExpr::Kind::Subtract: os << "(- "; break;
        case NumExpr::Kind::Multiply: os << "(* "; break;
        case NumExpr::Kind::Divide: os << "(/ "; break;
    }
    print_expr(os, *e.lhs);
    os << ' ';
    print_expr(os, *e.rhs);
    os << ')';
}

const char* op_text(NumericComparison::Op op) {
    switch (op) {
        case NumericComparison::Op::Ge: return ">=";
        case NumericComparison::Op::Gt: return ">";
        case NumericComparison::Op::Eq: return "=";
        case NumericComparison::Op::Le: return "<=";
        case NumericComparison::Op::Lt: return "<";
    }
    return "?";
}

void print_condition(std::ostringstream& os, const Condition& cond) {
    os << "(and";
    for (const auto& lit : cond.literals) {
        os << ' ';
        if (lit.negated) os << "(not ";
        print_atom(os, lit.atom);
        if (lit.negated) os << ')';
    }
    for (const auto& cmp : cond.comparisons) {
        os << " (" << op_text(cmp.op) << ' ';
        print_expr(os, cmp.lhs);
        os << ' ';
        print_expr(os, cmp.rhs);
        os << ')';
    }
    os << ')';
}

void print_effect(std::ostringstream& os, const Effect& eff) {
    os << "(and";
    for (const auto& atom : eff.add) {
        os << ' ';
        print_atom(os, atom);
    }
    for (const auto& atom : eff.del) {
        os << " (not ";
        print_atom(os, atom);
        os << ')';
    }
    for (const auto& ne : eff.numeric) {
        switch (ne.kind) {
            case NumericEffect::Kind::Increase: os << " (increase "; break;
            case NumericEffect::Kind::Decrease: os << " (decrease "; break;
            case NumericEffect::Kind::Assign: os << " (assign "; break;
        }
        print_fluent(os, ne.target);
        os << ' ';
        print_expr(os, ne.expr);
        os << ')';
    }
    os << ')';
}

}  // namespace

std::string to_pddl(const Condition& cond) {
    std::ostringstream os;
    print_condition(os, cond);
    return os.str();
}

std::string to_pddl(const NumExpr& expr) {
    std::ostringstream os;
    print_expr(os, expr);
    return os.str();
}

std::string to_pddl(const Domain& domain) {
    std::ostringstream os;
    os << "(define (domain " << domain.name << ")\n";
    if (!domain.requirements.empty()) {
        os << "  (:requirements";
        for (const auto& r : domain.requirements) os << " :" << r;
        os << ")\n";
    }
    if (!domain.types.empty()) {
        os << "  (:types ";
        print_typed_list(os, domain.types, false);
        os << ")\n";
    }
    if (!domain.predicates.empty()) {
        os << "  (:predicates\n";
        for (const auto& p : domain.predicates) {
            os << "    (" << p.name;
            if (!p.params.empty()) {
                os << ' ';
                print_typed_list(os, p.params, true);
            }
            os << ")\n";
        }
        os << "  )\n";
    }
    if (!domain.functions.empty()) {
        os << "  (:functions\n";
        for (const auto& f : domain.functions) {
            os << "    (" << f.name;
            if (!f.params.empty()) {
                os << ' ';
                print_typed_list(os, f.params, true);
            }
            os << ")\n";
        }
        os << "  )\n";
    }
    for (const auto& a : domain.actions) {
        os << "  (:action " << a.name << "\n    :parameters (";
        print_typed_list(os, a.params, true);
        os << ")\n    :precondition ";
        print_condition(os, a.precondition);
        os << "\n    :effect ";
        print_effect(os, a.effect);
        os << ")\n";
    }
    os << ")\n";
    return os.str();
}

std::string to_pddl(const Problem& problem) {
    std::ostringstream os;
    os << "(define (problem " << problem.name << ")\n";
    os << "  (:domain " << problem.domain_name << ")\n";
    if (!problem.objects.empty()) {
        os << "  (:objects ";
        print_typed_list(os, problem.objects, false);
        os << ")\n";
    }
    os << "  (:init\n";
    for (const auto& atom : problem.init_atoms) {
        os << "    ";
        print_atom(os, atom);
        os << '\n';
    }
    for (const auto& [ft, value] : problem.init_fluents) {
        os << "    (= ";
        print_fluent(os, ft);
        os << ' ' << number_to_string(value) << ")\n";
    }
    os << "  )\n  (:goal ";
    print_condition(os, problem.goal);
    os << ")\n)\n";
    return os.str();
}

std::string to_plan_text(const Plan& plan) {
    std::ostringstream os;
    for (const auto& step : plan)
        os << timestamp_to_string(step.timestamp) << ": " << step.action.signature()
           << '\n';
    return os.str();
}

}  // namespace fleetplan::pddl
