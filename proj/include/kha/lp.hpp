#pragma once

// Exact linear programming over the rationals: a dense two-phase simplex
// with Bland's rule. Deterministic pivoting, no tolerances — answers are
// exact and optima are returned as rationals with an optimal witness.

#include <vector>

#include "kha/rational.hpp"

namespace kha {

struct VarBound {
  bool has = false;
  Rational value = 0;
};

inline VarBound bound(Rational v) { return {true, std::move(v)}; }
inline VarBound unbounded() { return {}; }

/// max c^T x  subject to  A x = b  and  lower_i <= x_i <= upper_i
/// (either side of a variable's bound may be absent).
struct LpProblem {
  RMat a;
  RVec b;
  RVec c;
  std::vector<VarBound> lower;
  std::vector<VarBound> upper;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;
  RVec x;  // optimal point in the original variables (when Optimal)
};

LpResult solve_lp(const LpProblem& problem);

}  // namespace kha
