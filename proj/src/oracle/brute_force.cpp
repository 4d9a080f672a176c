#include "genericlab/oracle/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace genericlab::oracle {

namespace {

void check_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw CapExceeded(std::string(what) + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  }
}

std::uint64_t image_mask(const AlgebraAutomorphism& t, std::uint64_t mask, std::size_t atoms) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < atoms; ++i) {
    if ((mask >> i) & 1U) out |= std::uint64_t{1} << t(i);
  }
  return out;
}

Rational mask_measure(const FiniteAlgebra& algebra, std::uint64_t mask) {
  if (algebra.is_uniform()) return algebra.atom_measure(0) * static_cast<unsigned long>(std::popcount(mask));
  Rational total = 0;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) total += algebra.atom_measure(i);
  }
  return total;
}

}  // namespace

Rational uniform_distance(const AlgebraAutomorphism& t0, const AlgebraAutomorphism& t1, std::size_t cap) {
  require_same_algebra(t0.algebra(), t1.algebra(), "oracle::uniform_distance");
  const auto& algebra = t0.algebra();
  const std::size_t n = algebra.atom_count();
  check_cap(n, std::min<std::size_t>(cap, 62), "oracle::uniform_distance");
  Rational best = 0;
  int widest = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::uint64_t diff = image_mask(t0, mask, n) ^ image_mask(t1, mask, n);
    if (algebra.is_uniform()) {
      widest = std::max(widest, std::popcount(diff));
      continue;
    }
    Rational m = mask_measure(algebra, diff);
    if (m > best) best = std::move(m);
  }
  if (algebra.is_uniform()) return algebra.atom_measure(0) * static_cast<unsigned long>(widest);
  return best;
}

Rational rokhlin_base_measure(const AlgebraAutomorphism& t, std::size_t n, std::size_t cap) {
  const auto& algebra = t.algebra();
  const std::size_t atoms = algebra.atom_count();
  check_cap(atoms, std::min<std::size_t>(cap, 62), "oracle::rokhlin_base_measure");
  if (n == 0) throw std::invalid_argument("oracle::rokhlin_base_measure: n must be positive");
  Rational best = 0;
  int widest = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << atoms); ++mask) {
    std::uint64_t seen = mask;
    std::uint64_t level = mask;
    bool ok = true;
    for (std::size_t k = 1; k < n && ok; ++k) {
      level = image_mask(t, level, atoms);
      ok = (seen & level) == 0;
      seen |= level;
    }
    if (!ok) continue;
    if (algebra.is_uniform()) {
      widest = std::max(widest, std::popcount(mask));
      continue;
    }
    Rational m = mask_measure(algebra, mask);
    if (m > best) best = std::move(m);
  }
  if (algebra.is_uniform()) return algebra.atom_measure(0) * static_cast<unsigned long>(widest);
  return best;
}

Rational bottleneck_circle_distance(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t cap) {
  if (a.size() != b.size()) throw std::invalid_argument("oracle::bottleneck: sizes differ");
  check_cap(a.size(), cap, "oracle::bottleneck");
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational best = 1;
  do {
    Rational worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational d = dist_to_integer(a[i] - b[perm[i]]);
      if (d > worst) worst = std::move(d);
    }
    if (worst < best) best = std::move(worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.empty() ? Rational(0) : best;
}

}  // namespace genericlab::oracle
