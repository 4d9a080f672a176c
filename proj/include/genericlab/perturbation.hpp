#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "genericlab/measure_algebra.hpp"
#include "genericlab/rational.hpp"

namespace genericlab {

/// A fresh algebra L with an automorphism ρ and, for each marker index n,
/// an event c_n such that (c_n, ρ) generates an exact n-partition.
struct CycleSystem {
  FiniteAlgebra algebra;
  AlgebraAutomorphism rho;
  std::map<std::size_t, Event> markers;
};

/// L = ℤ₁ × ℤ₂ × … × ℤ_{n_max} with uniform atoms, ρ the product of unit
/// shifts and c_n = {x : x_n = 0}. Coordinate 1 is the most significant
/// digit of the atom index.
CycleSystem standard_cycle_system(std::size_t n_max);

/// Thrown when the fresh algebra is too coarse to carry the reference
/// n-cycle; refining every atom into `factor` equal pieces fixes it.
class RefinementRequired : public std::invalid_argument {
 public:
  RefinementRequired(const std::string& what, std::size_t factor)
      : std::invalid_argument(what), factor_(factor) {}
  std::size_t factor() const { return factor_; }

 private:
  std::size_t factor_;
};

/// An extension B = A ⊗ L of (A, τ_A) with τ_B restricting to τ_A on A ⊗ 1
/// and exact n-partitions (1 ⊗ c_n, τ_B) whose levels all lie in 1 ⊗ L.
class PartitionedExtension {
 public:
  /// Literal product: τ_B = τ_A ⊗ ρ, markers 1 ⊗ c_n.
  PartitionedExtension(const AlgebraAutomorphism& base_auto, const CycleSystem& cycles);

  /// General form over an existing amalgam A ⊗ L. Validates that tb extends
  /// base_auto and that every marker generates an exact partition inside
  /// 1 ⊗ L; throws std::invalid_argument otherwise.
  PartitionedExtension(Amalgam amalgam, AlgebraAutomorphism base_auto, AlgebraAutomorphism tb,
                       std::map<std::size_t, Event> markers);

  const Amalgam& amalgam() const { return amalgam_; }
  const FiniteAlgebra& algebra() const { return amalgam_.algebra(); }
  const FiniteAlgebra& base() const { return amalgam_.left(); }
  const FiniteAlgebra& fresh() const { return amalgam_.right(); }
  const AlgebraAutomorphism& base_auto() const { return base_auto_; }
  const AlgebraAutomorphism& extension_auto() const { return tb_; }
  const std::map<std::size_t, Event>& markers() const { return markers_; }

  /// 1 ⊗ c_n as an event of B.
  Event marker_event(std::size_t n) const;
  Event embed(const Event& a) const { return amalgam_.embed_left(a); }

 private:
  Amalgam amalgam_;
  AlgebraAutomorphism base_auto_;
  AlgebraAutomorphism tb_;
  std::map<std::size_t, Event> markers_;
};

PartitionedExtension partitioned_extension(const AlgebraAutomorphism& base_auto, std::size_t n_max);

/// The fixed pair (ℓ_n, ρ_n) on a uniform fresh algebra of N atoms, n | N:
/// ℓ_n = {0, …, N/n − 1} and ρ_n(i) = i + N/n mod N, so ρ_n^n = id.
struct ReferenceCycle {
  Event ell;
  AlgebraAutomorphism rho_n;
};

ReferenceCycle reference_cycle(const FiniteAlgebra& fresh, std::size_t n);

struct Perturbation {
  std::size_t n = 0;
  /// Automorphism of B fixing A ⊗ 1 with θ₂ τ'_B θ₂⁻¹ = τ_A ⊗ ρ_n.
  AlgebraAutomorphism theta2;
  /// τ'_B = θ₂⁻¹ (τ_A ⊗ ρ_n) θ₂
  AlgebraAutomorphism perturbed;
  /// τ_A ⊗ ρ_n on B.
  AlgebraAutomorphism model;
  /// d(τ_B, τ'_B), exact.
  Rational distance;
};

/// Builds θ₁ = id_A ⊗ θ₀ on B_{≤1⊗c} (θ₀ the order-preserving atom
/// bijection L_{≤c} → L_{≤ℓ_n}) and spreads it over the tower levels
///   θ₂(b) = ⋁_{k<n} (τ_A ⊗ ρ_n)^k θ₁ τ_B^{-k}(b ∧ (1 ⊗ c_k)),
/// with 1 ⊗ c_k = τ_B^k(1 ⊗ c_n).
///
/// Throws std::out_of_range when n is not a marker index,
/// std::invalid_argument when μ(c_n) ≠ 1/n, and RefinementRequired when the
/// fresh algebra cannot carry ℓ_n.
Perturbation lemma211_perturb(const PartitionedExtension& ext, std::size_t n);

/// Tower level k of every atom of B for marker n, i.e. the atom lies in
/// τ_B^k(1 ⊗ c_n).
std::vector<std::size_t> tower_levels(const PartitionedExtension& ext, std::size_t n);

/// τ′_B(b) = τ_B(b) for every atom b on levels 0 … n−2.
bool agrees_below_top_level(const PartitionedExtension& ext, const Perturbation& p);

/// θ₂(a ⊗ 1) = a ⊗ 1 for every atom a of A.
bool fixes_base(const PartitionedExtension& ext, const AlgebraAutomorphism& theta);

/// d(f t0 f⁻¹, t1) ≤ r
bool is_r_perturbation(const AlgebraAutomorphism& f, const AlgebraAutomorphism& t0,
                       const AlgebraAutomorphism& t1, const Rational& r);

/// Chains the perturbations of two partitioned extensions living over the
/// same amalgam into one map f: B → C fixing A ⊗ 1 with
/// f τ'_B f⁻¹ = τ'_C; `distance` is d(f τ_B f⁻¹, τ_C).
struct ChainedPerturbation {
  AlgebraAutomorphism map;
  Rational distance;
  Rational left_distance;
  Rational right_distance;
};

ChainedPerturbation chain_perturbations(const PartitionedExtension& b, const PartitionedExtension& c,
                                        std::size_t n);

}  // namespace genericlab
