#pragma once

#include <string_view>

#include "fleetplan/pddl/ast.hpp"

namespace fleetplan::pddl {

// Throws SyntaxError / UnknownRequirement / SemanticError with positions.
Domain parse_domain(std::string_view text);

// Cross-checks the problem against the domain declarations.
Problem parse_problem(std::string_view text, const Domain& domain);

// One step per line: "<float>: (<name> <args...>)". Blank lines and
// ';' comments are ignored. Actions are grounded and type-checked.
Plan parse_plan(std::string_view text, const Domain& domain);

// Binds schema parameters to objects and substitutes them into the
// precondition and effects. Throws UnknownAction / ArityMismatch /
// SemanticError on type errors.
GroundAction ground_action(const Domain& domain, const Problem& problem,
                           const std::string& name,
                           const std::vector<std::string>& args,
                           SourcePos pos = {});

}  // namespace fleetplan::pddl
