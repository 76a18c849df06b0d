#include "fleetplan/pddl/ast.hpp"

#include <algorithm>

namespace fleetplan::pddl {

bool operator==(const NumExpr& a, const NumExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NumExpr::Kind::Constant: return a.constant == b.constant;
        case NumExpr::Kind::Fluent: return a.fluent == b.fluent;
        default: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
    }
}

const PredicateDecl* Domain::find_predicate(const std::string& name) const {
    for (const auto& p : predicates)
        if (p.name == name) return &p;
    return nullptr;
}

const FunctionDecl* Domain::find_function(const std::string& name) const {
    for (const auto& f : functions)
        if (f.name == name) return &f;
    return nullptr;
}

const ActionSchema* Domain::find_action(const std::string& name) const {
    for (const auto& a : actions)
        if (a.name == name) return &a;
    return nullptr;
}

bool Domain::has_type(const std::string& name) const {
    if (name == "object") return true;
    return std::any_of(types.begin(), types.end(),
                       [&](const TypedParam& t) { return t.name == name; });
}

bool Domain::is_subtype(const std::string& sub, const std::string& super) const {
    if (super == "object" || sub == super) return true;
    std::string cur = sub;
    // Walk up the parent chain; hierarchies are small, no memoization needed.
    for (size_t guard = 0; guard <= types.size(); ++guard) {
        const TypedParam* decl = nullptr;
        for (const auto& t : types)
            if (t.name == cur) {
                decl = &t;
                break;
            }
        if (!decl) return false;
        if (decl->type == super) return true;
        if (decl->type == "object") return false;
        cur = decl->type;
    }
    return false;
}

const TypedParam* Problem::find_object(const std::string& name) const {
    for (const auto& o : objects)
        if (o.name == name) return &o;
    return nullptr;
}

std::string GroundAction::signature() const {
    std::string out = "(" + name;
    for (const auto& arg : args) {
        out += ' ';
        out += arg;
    }
    out += ')';
    return out;
}

}  // namespace fleetplan::pddl
