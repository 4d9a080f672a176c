#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "genericlab/measure_algebra.hpp"
#include "genericlab/spectral.hpp"
#include "genericlab/unitary.hpp"

namespace genericlab::cli {

/// The single generator used for every seeded experiment.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound).
std::size_t draw_below(Rng& rng, std::size_t bound);

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);
AlgebraAutomorphism random_automorphism(const FiniteAlgebra& algebra, Rng& rng);
/// Each atom joins independently with probability 1/2.
Event random_event(const FiniteAlgebra& algebra, Rng& rng);

/// Calls f on every permutation of {0..n-1} in lexicographic order.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    f(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

struct DatumShape {
  std::size_t max_arcs = 3;
  std::size_t max_points = 4;
  /// Endpoints and eigenvalues are drawn from k/grid.
  std::size_t grid = 24;
};

SpectralDatum random_datum(Rng& rng, const DatumShape& shape = {});
/// Same essential part and isolated multiplicities, with extra eigenvalues
/// thrown inside the essential arcs.
SpectralDatum equivalent_variant(const SpectralDatum& d, Rng& rng, const DatumShape& shape = {});
/// Points only, each with multiplicity one.
std::vector<Rational> random_circle_points(std::size_t count, Rng& rng, std::size_t grid);

/// Haar-like unitary from the QR factorization of a Gaussian matrix.
ConcreteUnitary random_unitary(std::size_t dim, Rng& rng);
/// V (U₁ ⊕ U₂) V* with V, U₁, U₂ random; the first `block` columns of V
/// span an invariant subspace.
struct ReducibleUnitary {
  ConcreteUnitary unitary;
  ComplexMatrix block_basis;
};
ReducibleUnitary random_reducible_unitary(std::size_t dim, std::size_t block, Rng& rng);

ComplexVector random_vector(std::size_t dim, Rng& rng);

}  // namespace genericlab::cli
