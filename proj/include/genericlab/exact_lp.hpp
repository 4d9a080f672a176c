#pragma once

#include <cstddef>
#include <vector>

#include "genericlab/rational.hpp"

namespace genericlab {

/// minimize cost·x  subject to  rows·x = rhs,  x ≥ 0
struct LinearProgram {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;

  std::size_t variable_count() const { return cost.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's
/// smallest-index rule, so it terminates on degenerate programs. Redundant
/// equality rows are detected after phase one and dropped.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace genericlab
