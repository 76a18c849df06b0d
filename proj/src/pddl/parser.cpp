#include "fleetplan/pddl/parser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fleetplan/pddl/lexer.hpp"

namespace fleetplan::pddl {

namespace {

const std::set<std::string> kSupportedRequirements = {
    "typing", "fluents", "negative-preconditions"};

// Constructs rejected with a pointed diagnostic instead of a generic
// syntax error.
const std::set<std::string> kRejectedFormulaHeads = {
    "or", "imply", "exists", "forall", "when", "oneof"};

class DomainParser {
public:
    explicit DomainParser(std::string_view text) : lex_(text) {}

    Domain parse() {
        expect_lparen();
        expect_symbol("define");
        expect_lparen();
        expect_symbol("domain");
        domain_.name = expect_name("domain name");
        expect_rparen();

        while (lex_.peek().kind == Token::Kind::LParen) {
            SourcePos start = lex_.peek().pos;
            lex_.next();
            const Token& head = lex_.next();
            if (head.kind != Token::Kind::Keyword)
                throw SyntaxError(head.pos, "expected a ':'-keyword section");
            if (head.text == "requirements") {
                parse_requirements();
            } else if (head.text == "types") {
                domain_.types = parse_typed_names();
                expect_rparen();
            } else if (head.text == "constants") {
                throw SyntaxError(start, ":constants is outside the supported subset");
            } else if (head.text == "predicates") {
                parse_predicates();
            } else if (head.text == "functions") {
                parse_functions();
            } else if (head.text == "action") {
                parse_action(start);
            } else if (head.text == "durative-action") {
                throw SyntaxError(start,
                                  "durative actions are not supported; only instantaneous "
                                  ":action definitions are accepted");
            } else {
                throw SyntaxError(head.pos, "unknown section :" + head.text);
            }
        }
        expect_rparen();
        expect_end();
        check_domain();
        return std::move(domain_);
    }

private:
    void parse_requirements() {
        while (lex_.peek().kind == Token::Kind::Keyword) {
            const Token& t = lex_.next();
            if (t.text == "strips") continue;  // implied baseline
            if (!kSupportedRequirements.count(t.text))
                throw UnknownRequirement(t.pos, t.text);
            domain_.requirements.push_back(t.text);
        }
        expect_rparen();
    }

    // name... [- type] repeated; used for :types, :parameters, :objects.
    std::vector<TypedParam> parse_typed_names() {
        std::vector<TypedParam> out;
        std::vector<std::string> pending;
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::RParen) break;
            if (t.kind == Token::Kind::Symbol && t.text == "-") {
                lex_.next();
                std::string type = expect_name("type name");
                if (pending.empty())
                    throw SyntaxError(t.pos, "dangling '-' without names before it");
                for (auto& n : pending) out.push_back({std::move(n), type});
                pending.clear();
            } else if (t.kind == Token::Kind::Symbol || t.kind == Token::Kind::Variable) {
                pending.push_back(t.text);
                lex_.next();
            } else {
                throw SyntaxError(t.pos, "expected name, '-', or ')'");
            }
        }
        for (auto& n : pending) out.push_back({std::move(n), "object"});
        return out;
    }

    void parse_predicates() {
        while (lex_.peek().kind == Token::Kind::LParen) {
            lex_.next();
            PredicateDecl decl;
            decl.name = expect_name("predicate name");
            decl.params = parse_typed_names();
            expect_rparen();
            domain_.predicates.push_back(std::move(decl));
        }
        expect_rparen();
    }

    void parse_functions() {
        while (lex_.peek().kind == Token::Kind::LParen) {
            lex_.next();
            FunctionDecl decl;
            decl.name = expect_name("function name");
            decl.params = parse_typed_names();
            expect_rparen();
            domain_.functions.push_back(std::move(decl));
        }
        expect_rparen();
    }

    void parse_action(SourcePos start) {
        ActionSchema schema;
        schema.name = expect_name("action name");
        bool saw_params = false, saw_pre = false, saw_effect = false;
        while (lex_.peek().kind == Token::Kind::Keyword) {
            const Token& key = lex_.next();
            if (key.text == "parameters") {
                expect_lparen();
                schema.params = parse_typed_names();
                expect_rparen();
                saw_params = true;
            } else if (key.text == "precondition") {
                schema.precondition = parse_condition();
                saw_pre = true;
            } else if (key.text == "effect") {
                schema.effect = parse_effect();
                saw_effect = true;
            } else {
                throw SyntaxError(key.pos, "unexpected :" + key.text + " in action body");
            }
        }
        expect_rparen();
        if (!saw_params)
            throw SyntaxError(start, "action '" + schema.name + "' is missing :parameters");
        if (!saw_pre)
            throw SyntaxError(start, "action '" + schema.name + "' is missing :precondition");
        if (!saw_effect)
            throw SyntaxError(start, "action '" + schema.name + "' is missing :effect");
        domain_.actions.push_back(std::move(schema));
    }

    Condition parse_condition() {
        Condition cond;
        parse_condition_into(cond);
        return cond;
    }

    void parse_condition_into(Condition& cond) {
        SourcePos start = expect_lparen();
        const Token& head = lex_.peek();
        if (head.kind == Token::Kind::Symbol && head.text == "and") {
            lex_.next();
            while (lex_.peek().kind == Token::Kind::LParen) parse_condition_into(cond);
            expect_rparen();
            return;
        }
        if (head.kind == Token::Kind::Symbol && head.text == "not") {
            lex_.next();
            Literal lit;
            lit.negated = true;
            lit.atom = parse_atom_parens();
            cond.literals.push_back(std::move(lit));
            expect_rparen();
            return;
        }
        if (head.kind == Token::Kind::Symbol && kRejectedFormulaHeads.count(head.text)) {
            throw SyntaxError(head.pos, "'" + head.text +
                                            "' formulas are outside the supported subset "
                                            "(conjunctions of literals and comparisons only)");
        }
        if (head.kind == Token::Kind::Symbol && is_comparison_op(head.text)) {
            lex_.next();
            NumericComparison cmp;
            cmp.op = comparison_op(head.text, head.pos);
            cmp.lhs = parse_num_expr();
            cmp.rhs = parse_num_expr();
            expect_rparen();
            cond.comparisons.push_back(std::move(cmp));
            return;
        }
        // plain atom
        Literal lit;
        lit.atom = parse_atom_body(start);
        cond.literals.push_back(std::move(lit));
    }

    static bool is_comparison_op(const std::string& s) {
        return s == ">=" || s == ">" || s == "=" || s == "<=" || s == "<";
    }

    static NumericComparison::Op comparison_op(const std::string& s, SourcePos pos) {
        if (s == ">=") return NumericComparison::Op::Ge;
        if (s == ">") return NumericComparison::Op::Gt;
        if (s == "=") return NumericComparison::Op::Eq;
        if (s == "<=") return NumericComparison::Op::Le;
        if (s == "<") return NumericComparison::Op::Lt;
        throw SyntaxError(pos, "unknown comparison operator " + s);
    }

    NumExpr parse_num_expr() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            lex_.next();
            return NumExpr::number(t.number);
        }
        if (t.kind != Token::Kind::LParen)
            throw SyntaxError(t.pos, "expected number or '(' in numeric expression");
        lex_.next();
        const Token& head = lex_.next();
        if (head.kind != Token::Kind::Symbol)
            throw SyntaxError(head.pos, "expected operator or function name");
        if (head.text == "+" || head.text == "-" || head.text == "*" || head.text == "/") {
            NumExpr::Kind kind = head.text == "+"   ? NumExpr::Kind::Add
                                 : head.text == "-" ? NumExpr::Kind::Subtract
                                 : head.text == "*" ? NumExpr::Kind::Multiply
                                                    : NumExpr::Kind::Divide;
            NumExpr a = parse_num_expr();
            NumExpr b = parse_num_expr();
            expect_rparen();
            return NumExpr::binary(kind, std::move(a), std::move(b));
        }
        FluentTerm ft;
        ft.function = head.text;
        while (lex_.peek().kind == Token::Kind::Symbol ||
               lex_.peek().kind == Token::Kind::Variable) {
            ft.args.push_back(term_text(lex_.next()));
        }
        expect_rparen();
        return NumExpr::term(std::move(ft));
    }

    Effect parse_effect() {
        Effect eff;
        parse_effect_into(eff);
        return eff;
    }

    void parse_effect_into(Effect& eff) {
        SourcePos start = expect_lparen();
        const Token& head = lex_.peek();
        if (head.kind == Token::Kind::Symbol && head.text == "and") {
            lex_.next();
            while (lex_.peek().kind == Token::Kind::LParen) parse_effect_into(eff);
            expect_rparen();
            return;
        }
        if (head.kind == Token::Kind::Symbol && head.text == "not") {
            lex_.next();
            eff.del.push_back(parse_atom_parens());
            expect_rparen();
            return;
        }
        if (head.kind == Token::Kind::Symbol &&
            (head.text == "when" || head.text == "forall")) {
            throw SyntaxError(head.pos, "conditional/quantified effects are outside the "
                                        "supported subset");
        }
        if (head.kind == Token::Kind::Symbol &&
            (head.text == "increase" || head.text == "decrease" || head.text == "assign")) {
            lex_.next();
            NumericEffect ne;
            ne.kind = head.text == "increase"   ? NumericEffect::Kind::Increase
                      : head.text == "decrease" ? NumericEffect::Kind::Decrease
                                                : NumericEffect::Kind::Assign;
            SourcePos p = expect_lparen();
            ne.target = parse_fluent_body(p);
            ne.expr = parse_num_expr();
            expect_rparen();
            eff.numeric.push_back(std::move(ne));
            return;
        }
        eff.add.push_back(parse_atom_body(start));
    }

    Atom parse_atom_parens() {
        SourcePos p = expect_lparen();
        return parse_atom_body(p);
    }

    // Caller consumed the '('.
    Atom parse_atom_body(SourcePos pos) {
        Atom atom;
        const Token& name = lex_.next();
        if (name.kind != Token::Kind::Symbol)
            throw SyntaxError(name.kind == Token::Kind::End ? pos : name.pos,
                              "expected predicate name");
        atom.predicate = name.text;
        while (lex_.peek().kind == Token::Kind::Symbol ||
               lex_.peek().kind == Token::Kind::Variable) {
            atom.args.push_back(term_text(lex_.next()));
        }
        expect_rparen();
        return atom;
    }

    FluentTerm parse_fluent_body(SourcePos pos) {
        FluentTerm ft;
        const Token& name = lex_.next();
        if (name.kind != Token::Kind::Symbol)
            throw SyntaxError(name.kind == Token::Kind::End ? pos : name.pos,
                              "expected function name");
        ft.function = name.text;
        while (lex_.peek().kind == Token::Kind::Symbol ||
               lex_.peek().kind == Token::Kind::Variable) {
            ft.args.push_back(term_text(lex_.next()));
        }
        expect_rparen();
        return ft;
    }

    static std::string term_text(const Token& t) {
        return t.kind == Token::Kind::Variable ? "?" + t.text : t.text;
    }

    // --- helpers ---

    SourcePos expect_lparen() {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::LParen) throw SyntaxError(t.pos, "expected '('");
        return t.pos;
    }
    void expect_rparen() {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::RParen) throw SyntaxError(t.pos, "expected ')'");
    }
    void expect_symbol(const std::string& s) {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::Symbol || t.text != s)
            throw SyntaxError(t.pos, "expected '" + s + "'");
    }
    std::string expect_name(const char* what) {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::Symbol)
            throw SyntaxError(t.pos, std::string("expected ") + what);
        return t.text;
    }
    void expect_end() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw SyntaxError(t.pos, "trailing content after domain definition");
    }

    // Declaration-level checks: unique names, resolvable types, variables
    // bound by parameters, declared functions in numeric expressions.
    void check_domain() {
        std::unordered_set<std::string> type_names{"object"};
        for (const auto& t : domain_.types) type_names.insert(t.name);
        for (const auto& t : domain_.types)
            if (!type_names.count(t.type))
                throw SemanticError("type '" + t.name + "' has undeclared parent '" +
                                    t.type + "'");

        auto check_unique = [](auto const& items, const char* what) {
            std::unordered_set<std::string> seen;
            for (const auto& item : items)
                if (!seen.insert(item.name).second)
                    throw SemanticError(std::string("duplicate ") + what + " '" +
                                        item.name + "'");
        };
        check_unique(domain_.predicates, "predicate");
        check_unique(domain_.functions, "function");
        check_unique(domain_.actions, "action");

        auto check_params_typed = [&](const std::vector<TypedParam>& params,
                                      const std::string& owner) {
            for (const auto& p : params)
                if (!type_names.count(p.type))
                    throw SemanticError("'" + owner + "' parameter " + p.name +
                                        " has undeclared type '" + p.type + "'");
        };
        for (const auto& p : domain_.predicates) check_params_typed(p.params, p.name);
        for (const auto& f : domain_.functions) check_params_typed(f.params, f.name);

        for (const auto& a : domain_.actions) {
            check_params_typed(a.params, a.name);
            std::unordered_set<std::string> bound;
            for (const auto& p : a.params) bound.insert("?" + p.name);
            auto check_term = [&](const std::string& term) {
                if (term.starts_with("?") && !bound.count(term))
                    throw SemanticError("action '" + a.name + "' uses free variable " +
                                        term);
            };
            auto check_atom = [&](const Atom& atom) {
                const PredicateDecl* decl = domain_.find_predicate(atom.predicate);
                if (!decl)
                    throw SemanticError("action '" + a.name + "' references undeclared "
                                        "predicate '" + atom.predicate + "'");
                if (decl->params.size() != atom.args.size())
                    throw SemanticError("action '" + a.name + "': predicate '" +
                                        atom.predicate + "' arity mismatch");
                for (const auto& arg : atom.args) check_term(arg);
            };
            auto check_fluent = [&](const FluentTerm& ft) {
                const FunctionDecl* decl = domain_.find_function(ft.function);
                if (!decl)
                    throw SemanticError("action '" + a.name + "' references undeclared "
                                        "function '" + ft.function + "'");
                if (decl->params.size() != ft.args.size())
                    throw SemanticError("action '" + a.name + "': function '" +
                                        ft.function + "' arity mismatch");
                for (const auto& arg : ft.args) check_term(arg);
            };
            std::function<void(const NumExpr&)> check_expr = [&](const NumExpr& e) {
                switch (e.kind) {
                    case NumExpr::Kind::Constant: break;
                    case NumExpr::Kind::Fluent: check_fluent(e.fluent); break;
                    default:
                        check_expr(*e.lhs);
                        check_expr(*e.rhs);
                }
            };
            for (const auto& lit : a.precondition.literals) check_atom(lit.atom);
            for (const auto& cmp : a.precondition.comparisons) {
                check_expr(cmp.lhs);
                check_expr(cmp.rhs);
            }
            for (const auto& atom : a.effect.add) check_atom(atom);
            for (const auto& atom : a.effect.del) check_atom(atom);
            for (const auto& ne : a.effect.numeric) {
                check_fluent(ne.target);
                check_expr(ne.expr);
            }
        }
    }

    Lexer lex_;
    Domain domain_;
};

class ProblemParser {
public:
    ProblemParser(std::string_view text, const Domain& domain)
        : lex_(text), domain_(domain) {}

    Problem parse() {
        expect_lparen();
        expect_symbol("define");
        expect_lparen();
        expect_symbol("problem");
        problem_.name = expect_name("problem name");
        expect_rparen();

        while (lex_.peek().kind == Token::Kind::LParen) {
            lex_.next();
            const Token& head = lex_.next();
            if (head.kind != Token::Kind::Keyword)
                throw SyntaxError(head.pos, "expected a ':'-keyword section");
            if (head.text == "domain") {
                problem_.domain_name = expect_name("domain name");
                expect_rparen();
            } else if (head.text == "objects") {
                problem_.objects = parse_typed_names();
                expect_rparen();
            } else if (head.text == "init") {
                parse_init();
            } else if (head.text == "goal") {
                parse_goal();
            } else {
                throw SyntaxError(head.pos, "unknown section :" + head.text);
            }
        }
        expect_rparen();
        if (lex_.peek().kind != Token::Kind::End)
            throw SyntaxError(lex_.peek().pos, "trailing content after problem definition");
        check_problem();
        return std::move(problem_);
    }

private:
    std::vector<TypedParam> parse_typed_names() {
        std::vector<TypedParam> out;
        std::vector<std::string> pending;
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::RParen) break;
            if (t.kind == Token::Kind::Symbol && t.text == "-") {
                lex_.next();
                std::string type = expect_name("type name");
                if (pending.empty())
                    throw SyntaxError(t.pos, "dangling '-' without names before it");
                for (auto& n : pending) out.push_back({std::move(n), type});
                pending.clear();
            } else if (t.kind == Token::Kind::Symbol) {
                pending.push_back(t.text);
                lex_.next();
            } else {
                throw SyntaxError(t.pos, "expected object name, '-', or ')'");
            }
        }
        for (auto& n : pending) out.push_back({std::move(n), "object"});
        return out;
    }

    void parse_init() {
        while (lex_.peek().kind == Token::Kind::LParen) {
            SourcePos pos = lex_.peek().pos;
            lex_.next();
            const Token& head = lex_.next();
            if (head.kind != Token::Kind::Symbol)
                throw SyntaxError(head.pos, "expected predicate name or '='");
            if (head.text == "=") {
                SourcePos p = expect_lparen_pos();
                FluentTerm ft;
                const Token& fname = lex_.next();
                if (fname.kind != Token::Kind::Symbol)
                    throw SyntaxError(p, "expected function name");
                ft.function = fname.text;
                while (lex_.peek().kind == Token::Kind::Symbol)
                    ft.args.push_back(lex_.next().text);
                expect_rparen();
                const Token& value = lex_.next();
                if (value.kind != Token::Kind::Number)
                    throw SyntaxError(value.pos, "expected numeric value in fluent init");
                expect_rparen();
                problem_.init_fluents[std::move(ft)] = value.number;
            } else {
                Atom atom;
                atom.predicate = head.text;
                while (lex_.peek().kind == Token::Kind::Symbol)
                    atom.args.push_back(lex_.next().text);
                if (lex_.peek().kind == Token::Kind::Variable)
                    throw SyntaxError(lex_.peek().pos, "init atoms must be ground");
                expect_rparen();
                (void)pos;
                problem_.init_atoms.push_back(std::move(atom));
            }
        }
        expect_rparen();
    }

    void parse_goal() {
        // Same grammar as preconditions, restricted to ground terms.
        goal_depth_parse(problem_.goal);
        expect_rparen();
    }

    void goal_depth_parse(Condition& cond) {
        SourcePos start = expect_lparen_pos();
        const Token& head = lex_.peek();
        if (head.kind == Token::Kind::Symbol && head.text == "and") {
            lex_.next();
            while (lex_.peek().kind == Token::Kind::LParen) goal_depth_parse(cond);
            expect_rparen();
            return;
        }
        if (head.kind == Token::Kind::Symbol && head.text == "not") {
            lex_.next();
            Literal lit;
            lit.negated = true;
            SourcePos p = expect_lparen_pos();
            lit.atom = parse_ground_atom(p);
            cond.literals.push_back(std::move(lit));
            expect_rparen();
            return;
        }
        if (head.kind == Token::Kind::Symbol && kRejectedFormulaHeads.count(head.text)) {
            throw SyntaxError(head.pos, "'" + head.text +
                                            "' goals are outside the supported subset");
        }
        if (head.kind == Token::Kind::Symbol &&
            (head.text == ">=" || head.text == ">" || head.text == "=" ||
             head.text == "<=" || head.text == "<")) {
            lex_.next();
            NumericComparison cmp;
            cmp.op = head.text == ">="   ? NumericComparison::Op::Ge
                     : head.text == ">"  ? NumericComparison::Op::Gt
                     : head.text == "="  ? NumericComparison::Op::Eq
                     : head.text == "<=" ? NumericComparison::Op::Le
                                         : NumericComparison::Op::Lt;
            cmp.lhs = parse_ground_expr();
            cmp.rhs = parse_ground_expr();
            expect_rparen();
            cond.comparisons.push_back(std::move(cmp));
            return;
        }
        Literal lit;
        lit.atom = parse_ground_atom(start);
        cond.literals.push_back(std::move(lit));
    }

    Atom parse_ground_atom(SourcePos pos) {
        Atom atom;
        const Token& name = lex_.next();
        if (name.kind != Token::Kind::Symbol)
            throw SyntaxError(name.kind == Token::Kind::End ? pos : name.pos,
                              "expected predicate name");
        atom.predicate = name.text;
        while (lex_.peek().kind == Token::Kind::Symbol)
            atom.args.push_back(lex_.next().text);
        if (lex_.peek().kind == Token::Kind::Variable)
            throw SyntaxError(lex_.peek().pos, "goal atoms must be ground");
        expect_rparen();
        return atom;
    }

    NumExpr parse_ground_expr() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            lex_.next();
            return NumExpr::number(t.number);
        }
        if (t.kind != Token::Kind::LParen)
            throw SyntaxError(t.pos, "expected number or '(' in numeric expression");
        lex_.next();
        const Token& head = lex_.next();
        if (head.kind != Token::Kind::Symbol)
            throw SyntaxError(head.pos, "expected operator or function name");
        if (head.text == "+" || head.text == "-" || head.text == "*" || head.text == "/") {
            NumExpr::Kind kind = head.text == "+"   ? NumExpr::Kind::Add
                                 : head.text == "-" ? NumExpr::Kind::Subtract
                                 : head.text == "*" ? NumExpr::Kind::Multiply
                                                    : NumExpr::Kind::Divide;
            NumExpr a = parse_ground_expr();
            NumExpr b = parse_ground_expr();
            expect_rparen();
            return NumExpr::binary(kind, std::move(a), std::move(b));
        }
        FluentTerm ft;
        ft.function = head.text;
        while (lex_.peek().kind == Token::Kind::Symbol)
            ft.args.push_back(lex_.next().text);
        if (lex_.peek().kind == Token::Kind::Variable)
            throw SyntaxError(lex_.peek().pos, "goal expressions must be ground");
        expect_rparen();
        return NumExpr::term(std::move(ft));
    }

    // Declaration cross-checks against the domain.
    void check_problem() {
        if (!problem_.domain_name.empty() && problem_.domain_name != domain_.name)
            throw SemanticError("problem targets domain '" + problem_.domain_name +
                                "' but '" + domain_.name + "' was supplied");

        for (const auto& obj : problem_.objects) {
            if (obj.type != "object" && !domain_.has_type(obj.type))
                throw SemanticError("object '" + obj.name + "' has undeclared type '" +
                                    obj.type + "'");
        }
        std::unordered_set<std::string> seen;
        for (const auto& obj : problem_.objects)
            if (!seen.insert(obj.name).second)
                throw SemanticError("duplicate object '" + obj.name + "'");

        auto object_type = [&](const std::string& name) -> const std::string& {
            const TypedParam* obj = problem_.find_object(name);
            if (!obj) throw SemanticError("undeclared object '" + name + "'");
            return obj->type;
        };
        auto check_atom = [&](const Atom& atom, const char* where) {
            const PredicateDecl* decl = domain_.find_predicate(atom.predicate);
            if (!decl)
                throw SemanticError(std::string(where) + " references undeclared "
                                    "predicate '" + atom.predicate + "'");
            if (decl->params.size() != atom.args.size())
                throw SemanticError(std::string(where) + ": predicate '" + atom.predicate +
                                    "' expects " + std::to_string(decl->params.size()) +
                                    " arguments, got " + std::to_string(atom.args.size()));
            for (size_t i = 0; i < atom.args.size(); ++i) {
                if (!domain_.is_subtype(object_type(atom.args[i]), decl->params[i].type))
                    throw SemanticError(std::string(where) + ": argument '" + atom.args[i] +
                                        "' of '" + atom.predicate + "' is not of type '" +
                                        decl->params[i].type + "'");
            }
        };
        auto check_fluent = [&](const FluentTerm& ft, const char* where) {
            const FunctionDecl* decl = domain_.find_function(ft.function);
            if (!decl)
                throw SemanticError(std::string(where) + " references undeclared "
                                    "function '" + ft.function + "'");
            if (decl->params.size() != ft.args.size())
                throw SemanticError(std::string(where) + ": function '" + ft.function +
                                    "' arity mismatch");
            for (size_t i = 0; i < ft.args.size(); ++i) {
                if (!domain_.is_subtype(object_type(ft.args[i]), decl->params[i].type))
                    throw SemanticError(std::string(where) + ": argument '" + ft.args[i] +
                                        "' of '" + ft.function + "' is not of type '" +
                                        decl->params[i].type + "'");
            }
        };

        for (const auto& atom : problem_.init_atoms) check_atom(atom, "init");
        for (const auto& [ft, value] : problem_.init_fluents) {
            check_fluent(ft, "init");
            if (!std::isfinite(value))
                throw SemanticError("init value for fluent is not finite");
        }
        std::function<void(const NumExpr&)> check_expr = [&](const NumExpr& e) {
            switch (e.kind) {
                case NumExpr::Kind::Constant: break;
                case NumExpr::Kind::Fluent: check_fluent(e.fluent, "goal"); break;
                default:
                    check_expr(*e.lhs);
                    check_expr(*e.rhs);
            }
        };
        for (const auto& lit : problem_.goal.literals) check_atom(lit.atom, "goal");
        for (const auto& cmp : problem_.goal.comparisons) {
            check_expr(cmp.lhs);
            check_expr(cmp.rhs);
        }
    }

    SourcePos expect_lparen_pos() {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::LParen) throw SyntaxError(t.pos, "expected '('");
        return t.pos;
    }
    void expect_lparen() { expect_lparen_pos(); }
    void expect_rparen() {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::RParen) throw SyntaxError(t.pos, "expected ')'");
    }
    void expect_symbol(const std::string& s) {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::Symbol || t.text != s)
            throw SyntaxError(t.pos, "expected '" + s + "'");
    }
    std::string expect_name(const char* what) {
        const Token& t = lex_.next();
        if (t.kind != Token::Kind::Symbol)
            throw SyntaxError(t.pos, std::string("expected ") + what);
        return t.text;
    }

    Lexer lex_;
    const Domain& domain_;
    Problem problem_;
};

void substitute(Atom& atom, const std::unordered_map<std::string, std::string>& binding) {
    for (auto& arg : atom.args) {
        auto it = binding.find(arg);
        if (it != binding.end()) arg = it->second;
    }
}

void substitute(FluentTerm& ft, const std::unordered_map<std::string, std::string>& binding) {
    for (auto& arg : ft.args) {
        auto it = binding.find(arg);
        if (it != binding.end()) arg = it->second;
    }
}

void substitute(NumExpr& e, const std::unordered_map<std::string, std::string>& binding) {
    switch (e.kind) {
        case NumExpr::Kind::Constant: break;
        case NumExpr::Kind::Fluent: substitute(e.fluent, binding); break;
        default: {
            // children may be shared between AST copies; clone before editing
            e.lhs = std::make_shared<NumExpr>(*e.lhs);
            e.rhs = std::make_shared<NumExpr>(*e.rhs);
            substitute(*e.lhs, binding);
            substitute(*e.rhs, binding);
        }
    }
}

}  // namespace

Domain parse_domain(std::string_view text) { return DomainParser(text).parse(); }

Problem parse_problem(std::string_view text, const Domain& domain) {
    return ProblemParser(text, domain).parse();
}

GroundAction ground_action(const Domain& domain, const Problem& problem,
                           const std::string& name,
                           const std::vector<std::string>& args, SourcePos pos) {
    const ActionSchema* schema = domain.find_action(name);
    if (!schema) throw UnknownAction(pos, name);
    if (schema->params.size() != args.size())
        throw ArityMismatch(pos, name, schema->params.size(), args.size());

    std::unordered_map<std::string, std::string> binding;
    for (size_t i = 0; i < args.size(); ++i) {
        const TypedParam* obj = problem.find_object(args[i]);
        if (!obj)
            throw SemanticError(pos, "action '" + name + "': undeclared object '" +
                                args[i] + "'");
        if (!domain.is_subtype(obj->type, schema->params[i].type))
            throw SemanticError(pos, "action '" + name + "': argument '" + args[i] +
                                "' is not of type '" + schema->params[i].type + "'");
        binding["?" + schema->params[i].name] = args[i];
    }

    GroundAction ga;
    ga.name = name;
    ga.args = args;
    ga.precondition = schema->precondition;
    ga.effect = schema->effect;
    for (auto& lit : ga.precondition.literals) substitute(lit.atom, binding);
    for (auto& cmp : ga.precondition.comparisons) {
        substitute(cmp.lhs, binding);
        substitute(cmp.rhs, binding);
    }
    for (auto& atom : ga.effect.add) substitute(atom, binding);
    for (auto& atom : ga.effect.del) substitute(atom, binding);
    for (auto& ne : ga.effect.numeric) {
        substitute(ne.target, binding);
        substitute(ne.expr, binding);
    }
    return ga;
}

Plan parse_plan(std::string_view text, const Domain& domain) {
    // The plan format carries no object declarations, so grounding
    // type-checks against a problem synthesized from the action arguments
    // would be circular; instead plan lines are grounded with objects typed
    // per the schema parameter they bind to. parse_plan is therefore used
    // together with a problem when full type checking matters
    // (validate_plan re-checks against the problem's objects).
    Plan plan;
    size_t line_no = 0;
    size_t start = 0;
    double prev_t = -std::numeric_limits<double>::infinity();
    while (start <= text.size()) {
        size_t eol = text.find('\n', start);
        std::string_view line = text.substr(
            start, eol == std::string_view::npos ? std::string_view::npos : eol - start);
        ++line_no;

        size_t comment = line.find(';');
        if (comment != std::string_view::npos) line = line.substr(0, comment);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            if (eol == std::string_view::npos) break;
            start = eol + 1;
            continue;
        }
        line = line.substr(first);

        size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw SyntaxError({static_cast<int>(line_no), static_cast<int>(first + 1)},
                              "expected '<timestamp>: (<action>)'");
        std::string ts_text(line.substr(0, colon));
        char* endp = nullptr;
        double ts = std::strtod(ts_text.c_str(), &endp);
        if (endp == ts_text.c_str())
            throw SyntaxError({static_cast<int>(line_no), static_cast<int>(first + 1)},
                              "invalid timestamp '" + ts_text + "'");
        if (ts < prev_t)
            throw SemanticError({static_cast<int>(line_no), 1},
                                "timestamps must be non-decreasing");
        prev_t = ts;

        Lexer lex(line.substr(colon + 1));
        const Token& lp = lex.next();
        if (lp.kind != Token::Kind::LParen)
            throw SyntaxError({static_cast<int>(line_no), static_cast<int>(colon + 2)},
                              "expected '(' after timestamp");
        const Token& name = lex.next();
        if (name.kind != Token::Kind::Symbol)
            throw SyntaxError({static_cast<int>(line_no), name.pos.column},
                              "expected action name");
        std::vector<std::string> args;
        while (lex.peek().kind == Token::Kind::Symbol) args.push_back(lex.next().text);
        const Token& rp = lex.next();
        if (rp.kind != Token::Kind::RParen)
            throw SyntaxError({static_cast<int>(line_no), rp.pos.column}, "expected ')'");
        if (!lex.at_end())
            throw SyntaxError({static_cast<int>(line_no), lex.peek().pos.column},
                              "trailing content after action");

        const ActionSchema* schema = domain.find_action(name.text);
        if (!schema)
            throw UnknownAction({static_cast<int>(line_no), name.pos.column}, name.text);
        if (schema->params.size() != args.size())
            throw ArityMismatch({static_cast<int>(line_no), name.pos.column}, name.text,
                                schema->params.size(), args.size());

        // Ground against a synthetic object table typed by the schema.
        Problem scratch;
        for (size_t i = 0; i < args.size(); ++i)
            scratch.objects.push_back({args[i], schema->params[i].type});
        TimedAction step;
        step.timestamp = ts;
        step.action = ground_action(domain, scratch, name.text, args,
                                    {static_cast<int>(line_no), name.pos.column});
        plan.push_back(std::move(step));

        if (eol == std::string_view::npos) break;
        start = eol + 1;
    }
    return plan;
}

}  // namespace fleetplan::pddl
