#pragma once

#include <vector>

#include "fleetplan/pddl/ast.hpp"
#include "fleetplan/pddl/state.hpp"

namespace fleetplan::planner {

enum class Heuristic { GoalCount, Blind };

struct SearchConfig {
    size_t max_expansions = 200000;
    Heuristic heuristic = Heuristic::GoalCount;
    double timeout_seconds = 30.0;
};

enum class PlanStatus { Solved, Unsolvable, BudgetExceeded, TimedOut };

struct PlanResult {
    PlanStatus status = PlanStatus::Unsolvable;
    pddl::Plan plan;       // valid only when status == Solved
    size_t expansions = 0;

    bool solved() const { return status == PlanStatus::Solved; }
};

// All type-consistent bindings of every schema, with statically false
// preconditions (static predicates wrong in init, constant comparisons over
// never-written fluents) pruned.
std::vector<pddl::GroundAction> ground_all_actions(const pddl::Domain& domain,
                                                   const pddl::Problem& problem);

// Unsatisfied goal conjuncts; numeric conjuncts contribute a residual bucket
// ceil(residual / largest-effect-step) and at least 1 while unsatisfied, so
// the value is 0 exactly when the goal holds.
double heuristic_value(const pddl::State& state, const pddl::Condition& goal,
                       double step_normalizer);

// Largest |numeric effect| evaluable in the initial state; 1.0 fallback.
double goal_count_normalizer(const std::vector<pddl::GroundAction>& actions,
                             const pddl::State& init);

// Greedy best-first search over ground states, goal-count heuristic, FIFO
// tie-break, duplicate detection by canonical state key. Deterministic for
// fixed inputs. Emitted timestamps are 0.0, 1.0, 2.0, ...
PlanResult plan(const pddl::Domain& domain, const pddl::Problem& problem,
                const SearchConfig& config = {});

}  // namespace fleetplan::planner
