#include "genericlab/cli/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace genericlab::cli {

std::size_t draw_below(Rng& rng, std::size_t bound) {
  // rejection sampling keeps results identical across standard libraries
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return static_cast<std::size_t>(v % bound);
  }
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw_below(rng, i)]);
  return perm;
}

AlgebraAutomorphism random_automorphism(const FiniteAlgebra& algebra, Rng& rng) {
  const std::size_t n = algebra.atom_count();
  if (algebra.is_uniform()) return AlgebraAutomorphism(algebra, random_permutation(n, rng));
  // permute within classes of equal measure
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return algebra.atom_measure(a) < algebra.atom_measure(b); });
  std::vector<std::size_t> perm(n);
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start;
    while (end < n && algebra.atom_measure(order[end]) == algebra.atom_measure(order[start])) ++end;
    const auto shuffle = random_permutation(end - start, rng);
    for (std::size_t k = 0; k < end - start; ++k) perm[order[start + k]] = order[start + shuffle[k]];
    start = end;
  }
  return AlgebraAutomorphism(algebra, std::move(perm));
}

Event random_event(const FiniteAlgebra& algebra, Rng& rng) {
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
    if (rng() & 1U) atoms.push_back(i);
  }
  return Event(algebra, std::move(atoms));
}

namespace {

// k/grid in lowest terms; mpq_class comparisons assume canonical operands
Rational grid_fraction(std::size_t k, std::size_t grid) {
  Rational r(static_cast<unsigned long>(k), static_cast<unsigned long>(grid));
  r.canonicalize();
  return r;
}

Rational grid_point(Rng& rng, std::size_t grid) { return grid_fraction(draw_below(rng, grid), grid); }

Multiplicity random_multiplicity(Rng& rng) {
  const std::size_t roll = draw_below(rng, 8);
  if (roll == 0) return kInfinite;
  return static_cast<std::uint64_t>(1 + roll % 3);
}

}  // namespace

SpectralDatum random_datum(Rng& rng, const DatumShape& shape) {
  const std::size_t arc_count = draw_below(rng, shape.max_arcs + 1);
  ArcSet essential;
  for (std::size_t i = 0; i < arc_count; ++i) {
    const Rational start = grid_point(rng, shape.grid);
    const Rational length = grid_fraction(1 + draw_below(rng, shape.grid / 2), shape.grid);
    essential = unite(essential, ArcSet::circular(start, length));
  }
  std::map<Rational, Multiplicity> eigen;
  const std::size_t point_count = draw_below(rng, shape.max_points + 1);
  for (std::size_t i = 0; i < point_count; ++i) eigen[grid_point(rng, shape.grid)] = random_multiplicity(rng);
  if (essential.is_empty() && eigen.empty()) eigen[grid_point(rng, shape.grid)] = 1;
  return SpectralDatum(ClosedCircleSet(std::move(essential)), std::move(eigen));
}

SpectralDatum equivalent_variant(const SpectralDatum& d, Rng& rng, const DatumShape& shape) {
  std::map<Rational, Multiplicity> eigen;
  for (const auto& [at, mult] : d.isolated()) eigen.emplace(at, mult);
  const auto arcs = d.essential().arcs().arcs();
  if (!arcs.empty()) {
    const std::size_t extra = draw_below(rng, shape.max_points + 1);
    for (std::size_t i = 0; i < extra; ++i) {
      const Arc& arc = arcs[draw_below(rng, arcs.size())];
      const Rational t = grid_point(rng, shape.grid);
      Rational at = arc.lo + (arc.hi - arc.lo) * t;
      if (at >= 1) at -= 1;
      eigen[at] = random_multiplicity(rng);
    }
  }
  return SpectralDatum(d.essential(), std::move(eigen));
}

std::vector<Rational> random_circle_points(std::size_t count, Rng& rng, std::size_t grid) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(grid_point(rng, grid));
  return out;
}

namespace {

double gaussian(Rng& rng) {
  // Box-Muller on 53-bit uniforms, so the stream does not depend on the library's normal_distribution
  auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  const double u = uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

}  // namespace

ConcreteUnitary random_unitary(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = {gaussian(rng), gaussian(rng)};
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return {qr.householderQ() * ComplexMatrix::Identity(n, n)};
}

ReducibleUnitary random_reducible_unitary(std::size_t dim, std::size_t block, Rng& rng) {
  if (block > dim) throw std::invalid_argument("random_reducible_unitary: block larger than dimension");
  const auto n = static_cast<Eigen::Index>(dim);
  const auto k = static_cast<Eigen::Index>(block);
  const ComplexMatrix frame = random_unitary(dim, rng).matrix;
  ComplexMatrix inner = ComplexMatrix::Zero(n, n);
  if (k > 0) inner.topLeftCorner(k, k) = random_unitary(block, rng).matrix;
  if (k < n) inner.bottomRightCorner(n - k, n - k) = random_unitary(dim - block, rng).matrix;
  ReducibleUnitary out;
  out.unitary.matrix = frame * inner * frame.adjoint();
  out.block_basis = frame.leftCols(k);
  return out;
}

ComplexVector random_vector(std::size_t dim, Rng& rng) {
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {gaussian(rng), gaussian(rng)};
  return v;
}

}  // namespace genericlab::cli
