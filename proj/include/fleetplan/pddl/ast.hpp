#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace fleetplan::pddl {

// Identifiers are case-insensitive per PDDL convention; the lexer lowercases
// them, so every name stored in the AST is already normalized.

struct TypedParam {
    std::string name;
    std::string type;

    bool operator==(const TypedParam&) const = default;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedParam> params;

    bool operator==(const PredicateDecl&) const = default;
};

struct FunctionDecl {
    std::string name;
    std::vector<TypedParam> params;

    bool operator==(const FunctionDecl&) const = default;
};

// Predicate applied to terms. Terms are object names or ?variables.
struct Atom {
    std::string predicate;
    std::vector<std::string> args;

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

// Numeric function applied to terms.
struct FluentTerm {
    std::string function;
    std::vector<std::string> args;

    bool operator==(const FluentTerm&) const = default;
    auto operator<=>(const FluentTerm&) const = default;
};

// Arithmetic expression over fluents and constants.
struct NumExpr {
    enum class Kind { Constant, Fluent, Add, Subtract, Multiply, Divide };

    Kind kind = Kind::Constant;
    double constant = 0.0;
    FluentTerm fluent;               // Kind::Fluent
    std::shared_ptr<NumExpr> lhs;    // binary kinds
    std::shared_ptr<NumExpr> rhs;

    static NumExpr number(double v) {
        NumExpr e;
        e.kind = Kind::Constant;
        e.constant = v;
        return e;
    }
    static NumExpr term(FluentTerm ft) {
        NumExpr e;
        e.kind = Kind::Fluent;
        e.fluent = std::move(ft);
        return e;
    }
    static NumExpr binary(Kind k, NumExpr a, NumExpr b) {
        NumExpr e;
        e.kind = k;
        e.lhs = std::make_shared<NumExpr>(std::move(a));
        e.rhs = std::make_shared<NumExpr>(std::move(b));
        return e;
    }
};

// Structural (deep) equality; the shared_ptr children are compared by value.
bool operator==(const NumExpr& a, const NumExpr& b);
inline bool operator!=(const NumExpr& a, const NumExpr& b) { return !(a == b); }

struct NumericComparison {
    enum class Op { Ge, Gt, Eq, Le, Lt };

    Op op = Op::Ge;
    NumExpr lhs;
    NumExpr rhs;

    bool operator==(const NumericComparison&) const = default;
};

struct Literal {
    Atom atom;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

// Conjunction of literals and numeric comparisons. This is the only formula
// shape the supported subset admits for preconditions and goals.
struct Condition {
    std::vector<Literal> literals;
    std::vector<NumericComparison> comparisons;

    bool empty() const { return literals.empty() && comparisons.empty(); }
    bool operator==(const Condition&) const = default;
};

struct NumericEffect {
    enum class Kind { Increase, Decrease, Assign };

    Kind kind = Kind::Increase;
    FluentTerm target;
    NumExpr expr;

    bool operator==(const NumericEffect&) const = default;
};

struct Effect {
    std::vector<Atom> add;
    std::vector<Atom> del;
    std::vector<NumericEffect> numeric;

    bool empty() const { return add.empty() && del.empty() && numeric.empty(); }
    bool operator==(const Effect&) const = default;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedParam> params;
    Condition precondition;
    Effect effect;

    bool operator==(const ActionSchema&) const = default;
};

struct Domain {
    std::string name;
    std::vector<std::string> requirements;
    // Declaration order preserved for printing; parent defaults to "object".
    std::vector<TypedParam> types;
    std::vector<PredicateDecl> predicates;
    std::vector<FunctionDecl> functions;
    std::vector<ActionSchema> actions;

    bool operator==(const Domain&) const = default;

    const PredicateDecl* find_predicate(const std::string& name) const;
    const FunctionDecl* find_function(const std::string& name) const;
    const ActionSchema* find_action(const std::string& name) const;
    bool has_type(const std::string& name) const;
    // True if `sub` equals `super` or is declared below it. Every type is a
    // subtype of "object".
    bool is_subtype(const std::string& sub, const std::string& super) const;
};

struct Problem {
    std::string name;
    std::string domain_name;
    std::vector<TypedParam> objects;
    std::vector<Atom> init_atoms;
    std::map<FluentTerm, double> init_fluents;
    Condition goal;

    bool operator==(const Problem&) const = default;

    const TypedParam* find_object(const std::string& name) const;
};

// Action schema with all parameters bound to objects.
struct GroundAction {
    std::string name;
    std::vector<std::string> args;
    Condition precondition;
    Effect effect;

    bool operator==(const GroundAction&) const = default;

    // "(name arg1 arg2 ...)"
    std::string signature() const;
};

struct TimedAction {
    double timestamp = 0.0;
    GroundAction action;

    bool operator==(const TimedAction&) const = default;
};

using Plan = std::vector<TimedAction>;

}  // namespace fleetplan::pddl
