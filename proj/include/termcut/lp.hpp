#pragma once

#include <string>
#include <utility>
#include <vector>

#include "termcut/rational.hpp"

namespace termcut {

enum class Sense { LE, GE, EQ };
enum class Direction { Maximize, Minimize };

struct LinearConstraint {
    std::vector<std::pair<int, Rat>> terms;  // (variable index, coefficient)
    Sense sense = Sense::LE;
    Rat rhs;
};

struct LPProblem {
    Direction direction = Direction::Maximize;
    std::vector<std::string> variable_names;
    std::vector<Rat> objective;   // one coefficient per variable
    std::vector<bool> nonneg;     // false = free variable
    std::vector<LinearConstraint> constraints;

    int add_variable(const std::string& name, bool nonnegative = true);
    void add_objective(int var, const Rat& coeff);
    int variable_count() const { return static_cast<int>(variable_names.size()); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rat value;
    std::vector<Rat> assignment;  // one value per variable, exact
};

// Two-phase simplex over exact rationals with Bland's anti-cycling rule.
LPSolution solve_lp(const LPProblem& problem);

}  // namespace termcut
