#pragma once

#include <optional>

#include "genericlab/exact_lp.hpp"

namespace genericlab::oracle {

inline constexpr std::size_t kVertexVariableCap = 16;

/// Minimum of cost·x over {rows·x = rhs, x ≥ 0} by enumerating every basic
/// feasible solution. Assumes the objective is bounded below on the
/// feasible set; nullopt when infeasible.
std::optional<Rational> vertex_lp_minimum(const LinearProgram& lp, std::size_t cap = kVertexVariableCap);

}  // namespace genericlab::oracle
