#pragma once

#include <string>

#include "fleetplan/pddl/ast.hpp"

namespace fleetplan::pddl {

// Shortest round-trip decimal representation ("5", "6.5", "0.1").
std::string number_to_string(double v);

// Like number_to_string but always with a decimal point ("0.0", "1.0").
std::string timestamp_to_string(double v);

std::string to_pddl(const Domain& domain);
std::string to_pddl(const Problem& problem);
std::string to_pddl(const Condition& cond);
std::string to_pddl(const NumExpr& expr);

// One "<t>: (<name> <args>)" line per step.
std::string to_plan_text(const Plan& plan);

}  // namespace fleetplan::pddl
