#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fleetplan {

// Position inside a source text, 1-based. Column 0 means "unknown".
struct SourcePos {
    int line = 0;
    int column = 0;
};

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace pddl {

class SyntaxError : public Error {
public:
    SyntaxError(SourcePos pos, const std::string& msg)
        : Error("syntax error at " + std::to_string(pos.line) + ":" +
                std::to_string(pos.column) + ": " + msg),
          pos_(pos), detail_(msg) {}

    SourcePos pos() const { return pos_; }
    const std::string& detail() const { return detail_; }

private:
    SourcePos pos_;
    std::string detail_;
};

class UnknownRequirement : public SyntaxError {
public:
    UnknownRequirement(SourcePos pos, const std::string& req)
        : SyntaxError(pos, "unsupported requirement :" + req) {}
};

// Well-formed s-expression that violates a declaration (bad type, arity,
// unknown predicate, ...). Position is best-effort.
class SemanticError : public Error {
public:
    SemanticError(SourcePos pos, const std::string& msg)
        : Error("semantic error at " + std::to_string(pos.line) + ":" +
                std::to_string(pos.column) + ": " + msg),
          pos_(pos), detail_(msg) {}

    explicit SemanticError(const std::string& msg)
        : Error("semantic error: " + msg), detail_(msg) {}

    SourcePos pos() const { return pos_; }
    const std::string& detail() const { return detail_; }

private:
    SourcePos pos_{};
    std::string detail_;
};

class UnknownAction : public SemanticError {
public:
    UnknownAction(SourcePos pos, const std::string& name)
        : SemanticError(pos, "unknown action '" + name + "'") {}
};

class ArityMismatch : public SemanticError {
public:
    ArityMismatch(SourcePos pos, const std::string& name, size_t expected, size_t got)
        : SemanticError(pos, "action '" + name + "' expects " + std::to_string(expected) +
                        " arguments, got " + std::to_string(got)) {}
};

class MissingFluent : public Error {
public:
    explicit MissingFluent(const std::string& term)
        : Error("fluent has no value: " + term) {}
};

class NotApplicable : public Error {
public:
    explicit NotApplicable(const std::string& action)
        : Error("action not applicable: " + action) {}
};

}  // namespace pddl
}  // namespace fleetplan
