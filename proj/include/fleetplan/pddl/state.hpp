#pragma once

#include <map>
#include <set>
#include <string>

#include "fleetplan/pddl/ast.hpp"

namespace fleetplan::pddl {

// Numeric comparisons tolerate 1e-9 to absorb rounding after long
// increase/decrease chains.
inline constexpr double kNumericEps = 1e-9;

struct State {
    std::set<Atom> atoms;
    std::map<FluentTerm, double> fluents;

    bool operator==(const State&) const = default;

    bool holds(const Atom& a) const { return atoms.count(a) > 0; }

    // Canonical serialization: sorted atoms then sorted fluent pairs.
    // Equal states produce equal keys.
    std::string key() const;
};

State initial_state(const Problem& problem);

// Throws MissingFluent when a referenced fluent has no value.
double evaluate(const NumExpr& expr, const State& state);

bool satisfied(const NumericComparison& cmp, const State& state);

// True iff every literal and comparison of the conjunction holds.
bool satisfied(const Condition& cond, const State& state);

// Fraction of goal conjuncts satisfied; 1.0 for an empty conjunction.
double satisfied_fraction(const Condition& cond, const State& state);

// Throws MissingFluent if a compared fluent term has no value.
bool applicable(const State& state, const GroundAction& action);

// Delete-before-add; numeric updates all read pre-state values. Returns a
// new state, never mutates. Throws NotApplicable.
State apply(const State& state, const GroundAction& action);

}  // namespace fleetplan::pddl
