#pragma once

#include <Eigen/Dense>
#include <vector>

namespace genericlab {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTolerance = 1e-10;

/// A small explicit operator on ℂⁿ meant to be unitary.
struct ConcreteUnitary {
  ComplexMatrix matrix;

  std::size_t dimension() const { return static_cast<std::size_t>(matrix.rows()); }
};

/// ‖U*U − I‖_F ≤ tol (and U square).
bool unitary_check(const ConcreteUnitary& u, double tol = kUnitaryTolerance);

/// ‖x+y‖² + ‖x−y‖² = 2‖x‖² + 2‖y‖² to within tol relative to the right side.
bool parallelogram_check(const ComplexVector& x, const ComplexVector& y, double tol = kUnitaryTolerance);

/// Orthogonal projector onto the smallest subspace containing span(vectors)
/// and invariant under U and U⁻¹ = U*. Throws std::invalid_argument if U is
/// not unitary or a vector has the wrong dimension.
ComplexMatrix invariant_projection(const ConcreteUnitary& u, const std::vector<ComplexVector>& vectors,
                                   double tol = kUnitaryTolerance);

struct CesaroResult {
  /// (1/m) Σ a_k inside the m-fold direct sum.
  ComplexVector average;
  /// P·a placed in the first summand.
  ComplexVector target;
  /// ‖average − target‖
  double error = 0;
  /// ‖a − P·a‖
  double residual = 0;
};

/// Builds m copies a_0 … a_{m−1} in H^m that share the component P·a (in
/// the first summand) and carry the residual a − P·a in pairwise
/// orthogonal summands, then averages them.
CesaroResult cesaro_canonical_base(const ConcreteUnitary& u, const ComplexVector& a,
                                   const std::vector<ComplexVector>& vectors, std::size_t m);

}  // namespace genericlab
