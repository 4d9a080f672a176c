#include "genericlab/unitary.hpp"

#include <stdexcept>

namespace genericlab {

bool unitary_check(const ConcreteUnitary& u, double tol) {
  const auto& m = u.matrix;
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).norm() <= tol;
}

bool parallelogram_check(const ComplexVector& x, const ComplexVector& y, double tol) {
  if (x.size() != y.size()) throw std::invalid_argument("parallelogram_check: dimension mismatch");
  const double lhs = (x + y).squaredNorm() + (x - y).squaredNorm();
  const double rhs = 2 * x.squaredNorm() + 2 * y.squaredNorm();
  return std::abs(lhs - rhs) <= tol * std::max(1.0, rhs);
}

namespace {

// Adds the normalized residual of v against the basis; false if v is (numerically) inside it.
bool extend_basis(std::vector<ComplexVector>& basis, ComplexVector v, double tol) {
  const double scale = std::max(1.0, v.norm());
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) v -= q.dot(v) * q;
  }
  const double n = v.norm();
  if (n <= tol * scale) return false;
  basis.push_back(v / n);
  return true;
}

}  // namespace

ComplexMatrix invariant_projection(const ConcreteUnitary& u, const std::vector<ComplexVector>& vectors, double tol) {
  if (!unitary_check(u)) throw std::invalid_argument("invariant_projection: operator is not unitary");
  const auto dim = u.matrix.rows();
  std::vector<ComplexVector> basis;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("invariant_projection: vector dimension mismatch");
    extend_basis(basis, v, tol);
  }
  const ComplexMatrix back = u.matrix.adjoint();
  std::size_t done = 0;
  while (done < basis.size()) {
    const ComplexVector q = basis[done++];
    extend_basis(basis, u.matrix * q, tol);
    extend_basis(basis, back * q, tol);
  }
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (const auto& q : basis) p += q * q.adjoint();
  return p;
}

CesaroResult cesaro_canonical_base(const ConcreteUnitary& u, const ComplexVector& a,
                                   const std::vector<ComplexVector>& vectors, std::size_t m) {
  if (m == 0) throw std::invalid_argument("cesaro_canonical_base: need at least one copy");
  const auto dim = u.matrix.rows();
  if (a.size() != dim) throw std::invalid_argument("cesaro_canonical_base: vector dimension mismatch");
  const ComplexMatrix p = invariant_projection(u, vectors);
  const ComplexVector pa = p * a;
  const ComplexVector r = a - pa;
  const auto total = dim * static_cast<Eigen::Index>(m);

  CesaroResult out;
  out.average = ComplexVector::Zero(total);
  out.target = ComplexVector::Zero(total);
  out.target.head(dim) = pa;
  for (std::size_t k = 0; k < m; ++k) {
    ComplexVector copy = ComplexVector::Zero(total);
    copy.head(dim) = pa;
    copy.segment(static_cast<Eigen::Index>(k) * dim, dim) += r;
    out.average += copy;
  }
  out.average /= static_cast<double>(m);
  out.error = (out.average - out.target).norm();
  out.residual = r.norm();
  return out;
}

}  // namespace genericlab
