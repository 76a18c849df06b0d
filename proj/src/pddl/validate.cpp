#include "fleetplan/pddl/validate.hpp"

#include "fleetplan/pddl/errors.hpp"

namespace fleetplan::pddl {

ValidationReport validate_plan(const Domain& domain, const Problem& problem,
                               const Plan& plan) {
    (void)domain;
    ValidationReport report;
    State state = initial_state(problem);

    for (size_t i = 0; i < plan.size(); ++i) {
        StepVerdict verdict;
        try {
            verdict.applicable = applicable(state, plan[i].action);
            if (!verdict.applicable)
                verdict.note = "precondition not satisfied: " + plan[i].action.signature();
        } catch (const Error& e) {
            verdict.applicable = false;
            verdict.note = e.what();
        }
        report.steps.push_back(verdict);
        if (!verdict.applicable) {
            report.first_failure = i;
            break;
        }
        state = apply(state, plan[i].action);
    }

    report.final_state = std::move(state);
    report.goal_fraction = satisfied_fraction(problem.goal, report.final_state);
    report.goal_satisfied = satisfied(problem.goal, report.final_state);
    return report;
}

}  // namespace fleetplan::pddl
