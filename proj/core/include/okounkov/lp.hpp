// Exact rational linear programming (dense two-phase simplex, Bland's rule).
#pragma once

#include "okounkov/rational.hpp"

namespace okounkov {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVec x;   // primal solution when Optimal
  Rat value;  // objective value when Optimal
};

/// minimize c.x subject to a x = b, x >= 0.
LpResult lp_minimize(const RatMat& a, const RatVec& b, const RatVec& c);

/// Whether target lies in the closed cone spanned by generators.
bool cone_contains(const std::vector<RatVec>& generators, const RatVec& target);

/// Nonnegative combination of generators equal to target, if one exists.
std::optional<RatVec> cone_combination(const std::vector<RatVec>& generators, const RatVec& target);

}  // namespace okounkov
