#include "genericlab/unitary.hpp"

#include <cmath>
#include <complex>

#include "helpers.hpp"

using namespace genericlab;

namespace {

ComplexMatrix cyclic_shift(Eigen::Index n) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m((i + 1) % n, i) = 1;
  return m;
}

ComplexVector basis(Eigen::Index n, Eigen::Index k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1;
  return v;
}

}  // namespace

TEST_CASE("unitary checks") {
  CHECK(unitary_check({ComplexMatrix::Identity(5, 5)}));
  ComplexMatrix phases = ComplexMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) phases(k, k) = std::polar(1.0, 0.7 * (k + 1));
  CHECK(unitary_check({phases}));
  CHECK_FALSE(unitary_check({2.0 * ComplexMatrix::Identity(2, 2)}));
  CHECK_FALSE(unitary_check({ComplexMatrix::Identity(2, 3)}));
  cli::Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(unitary_check(cli::random_unitary(8, rng)));
    CHECK(parallelogram_check(cli::random_vector(8, rng), cli::random_vector(8, rng)));
  }
}

TEST_CASE("invariant projections") {
  const ConcreteUnitary id{ComplexMatrix::Identity(4, 4)};
  const auto p = invariant_projection(id, {basis(4, 0), basis(4, 2)});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(2, 2) = 1;
  CHECK((p - expected).norm() < 1e-12);

  const ConcreteUnitary shift{cyclic_shift(4)};
  CHECK((invariant_projection(shift, {basis(4, 0)}) - ComplexMatrix::Identity(4, 4)).norm() < 1e-10);
  CHECK(invariant_projection(shift, {}).norm() == 0);

  CHECK_THROWS_AS(invariant_projection({2.0 * ComplexMatrix::Identity(2, 2)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(invariant_projection(id, {basis(3, 0)}), std::invalid_argument);
}

TEST_CASE("projection onto an invariant block") {
  cli::Rng rng(83);
  const auto red = cli::random_reducible_unitary(8, 3, rng);
  const ComplexMatrix p = invariant_projection(red.unitary, {red.block_basis.col(0)});
  CHECK((p * p - p).norm() < 1e-9);
  CHECK((p.adjoint() - p).norm() < 1e-9);
  CHECK((p * red.unitary.matrix - red.unitary.matrix * p).norm() < 1e-9);
  CHECK(std::abs(p.trace().real() - 3) < 1e-9);
}

TEST_CASE("averages of canonical copies") {
  const ConcreteUnitary shift{cyclic_shift(4)};
  // a already lies in the invariant span
  const auto inside = cesaro_canonical_base(shift, basis(4, 1), {basis(4, 0)}, 5);
  CHECK(inside.error < 1e-12);
  CHECK((inside.average.head(4) - basis(4, 1)).norm() < 1e-12);

  // unit residual, four copies
  const ConcreteUnitary id{ComplexMatrix::Identity(3, 3)};
  const auto four = cesaro_canonical_base(id, basis(3, 2), {basis(3, 0)}, 4);
  CHECK(std::abs(four.residual - 1) < 1e-12);
  CHECK(std::abs(four.error - 0.5) < 1e-12);

  double previous = 0;
  for (std::size_t m : {1U, 4U, 16U, 64U}) {
    const auto r = cesaro_canonical_base(id, basis(3, 2), {basis(3, 0)}, m);
    if (m > 1) CHECK(std::abs(r.error / previous - 0.5) < 1e-12);
    previous = r.error;
  }
}

TEST_CASE("averaging error follows the inverse square root law") {
  cli::Rng rng(89);
  for (int trial = 0; trial < 5; ++trial) {
    const auto red = cli::random_reducible_unitary(10, 4, rng);
    const auto a = cli::random_vector(10, rng);
    const std::vector<ComplexVector> b{red.block_basis.col(0), red.block_basis.col(1)};
    for (std::size_t m : {1U, 3U, 9U}) {
      const auto r = cesaro_canonical_base(red.unitary, a, b, m);
      CHECK(std::abs(r.error - r.residual / std::sqrt(static_cast<double>(m))) < 1e-8);
    }
  }
}
