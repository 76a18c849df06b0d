#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fleetplan/pddl/ast.hpp"
#include "fleetplan/pddl/state.hpp"

namespace fleetplan::pddl {

struct StepVerdict {
    bool applicable = false;
    std::string note;  // failure reason when not applicable
};

struct ValidationReport {
    std::vector<StepVerdict> steps;
    std::optional<size_t> first_failure;
    State final_state;          // state after the last applicable prefix step
    bool goal_satisfied = false;
    double goal_fraction = 0.0; // satisfied goal conjuncts / total

    bool valid() const { return !first_failure.has_value() && goal_satisfied; }
};

// Simulates the plan from the problem's initial state. Failures are report
// content, not errors; steps after the first failure are left unevaluated.
ValidationReport validate_plan(const Domain& domain, const Problem& problem,
                               const Plan& plan);

}  // namespace fleetplan::pddl
