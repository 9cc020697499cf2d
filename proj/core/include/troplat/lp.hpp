#pragma once

#include <vector>

#include "troplat/rational.hpp"

namespace troplat {

/// minimize c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x free.
struct LpProblem {
  int n = 0;
  std::vector<std::vector<Rational>> a_ub;
  std::vector<Rational> b_ub;
  std::vector<std::vector<Rational>> a_eq;
  std::vector<Rational> b_eq;
  std::vector<Rational> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Exact two-phase dense simplex with Bland's least-index rule; fully
/// deterministic.
LpSolution solve_lp(const LpProblem& p);

/// Rank of a set of rational row vectors (exact Gaussian elimination).
int matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace troplat
