#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "genericlab/rational.hpp"

namespace genericlab {

/// Raised when two values that must live over the same algebra do not.
class AlgebraMismatch : public std::invalid_argument {
 public:
  explicit AlgebraMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A finite probability algebra: finitely many atoms with exact positive
/// rational measures summing to one.
///
/// Copies share an identity token; two algebras built separately from equal
/// measure lists are *different* algebras, and mixing their events or
/// automorphisms raises AlgebraMismatch.
class FiniteAlgebra {
 public:
  explicit FiniteAlgebra(std::vector<Rational> measures);

  static FiniteAlgebra uniform(std::size_t atoms);

  std::size_t atom_count() const { return data_->measures.size(); }
  const Rational& atom_measure(std::size_t atom) const { return data_->measures.at(atom); }
  std::span<const Rational> measures() const { return data_->measures; }
  bool is_uniform() const { return data_->uniform; }

  bool same_as(const FiniteAlgebra& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::vector<Rational> measures;
    bool uniform = false;
  };
  std::shared_ptr<const Data> data_;
};

void require_same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b, const char* context);

class AlgebraAutomorphism;

/// An element of a finite algebra, stored as a sorted set of atom indices.
class Event {
 public:
  Event(FiniteAlgebra algebra, std::vector<std::size_t> atoms);

  static Event empty(const FiniteAlgebra& algebra);
  static Event full(const FiniteAlgebra& algebra);

  const FiniteAlgebra& algebra() const { return algebra_; }
  std::span<const std::size_t> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_empty() const { return atoms_.empty(); }
  bool contains(std::size_t atom) const;

  /// Indicator vector of length atom_count().
  std::vector<bool> mask() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.algebra_.same_as(b.algebra_) && a.atoms_ == b.atoms_;
  }

 private:
  struct Trusted {};
  Event(FiniteAlgebra algebra, std::vector<std::size_t> atoms, Trusted)
      : algebra_(std::move(algebra)), atoms_(std::move(atoms)) {}
  friend Event event_from_mask(const FiniteAlgebra& algebra, const std::vector<bool>& mask);
  friend Event apply(const AlgebraAutomorphism& t, const Event& e);

  FiniteAlgebra algebra_;
  std::vector<std::size_t> atoms_;
};

Event event_from_mask(const FiniteAlgebra& algebra, const std::vector<bool>& mask);

Rational measure(const Event& e);
Event complement(const Event& e);
Event intersect(const Event& a, const Event& b);
Event unite(const Event& a, const Event& b);
Event sym_diff(const Event& a, const Event& b);
bool disjoint(const Event& a, const Event& b);
Rational sym_diff_distance(const Event& a, const Event& b);

/// An automorphism of a finite algebra: a permutation of atoms that maps each
/// atom to an atom of the same measure.
class AlgebraAutomorphism {
 public:
  AlgebraAutomorphism(FiniteAlgebra algebra, std::vector<std::size_t> perm);

  static AlgebraAutomorphism identity(const FiniteAlgebra& algebra);
  /// Unit shift i -> i+1 mod N on a uniform algebra.
  static AlgebraAutomorphism cyclic_shift(const FiniteAlgebra& algebra);

  const FiniteAlgebra& algebra() const { return algebra_; }
  std::span<const std::size_t> perm() const { return perm_; }
  std::size_t operator()(std::size_t atom) const { return perm_[atom]; }
  bool is_identity() const;

  friend bool operator==(const AlgebraAutomorphism& a, const AlgebraAutomorphism& b) {
    return a.algebra_.same_as(b.algebra_) && a.perm_ == b.perm_;
  }

 private:
  struct Trusted {};
  AlgebraAutomorphism(FiniteAlgebra algebra, std::vector<std::size_t> perm, Trusted)
      : algebra_(std::move(algebra)), perm_(std::move(perm)) {}
  friend AlgebraAutomorphism compose(const AlgebraAutomorphism&, const AlgebraAutomorphism&);
  friend AlgebraAutomorphism inverse(const AlgebraAutomorphism&);
  friend AlgebraAutomorphism power(const AlgebraAutomorphism&, std::int64_t);

  FiniteAlgebra algebra_;
  std::vector<std::size_t> perm_;
};

Event apply(const AlgebraAutomorphism& t, const Event& e);
/// outer ∘ inner: apply inner first.
AlgebraAutomorphism compose(const AlgebraAutomorphism& outer, const AlgebraAutomorphism& inner);
AlgebraAutomorphism inverse(const AlgebraAutomorphism& t);
AlgebraAutomorphism power(const AlgebraAutomorphism& t, std::int64_t n);

/// Cycle decomposition; each cycle starts at its smallest atom, cycles are
/// ordered by that atom. Fixed atoms appear as length-one cycles.
std::vector<std::vector<std::size_t>> cycles(const AlgebraAutomorphism& t);

/// sup over events x of μ(t0(x) Δ t1(x)), exactly.
///
/// With ρ = t0⁻¹ t1 the supremum splits over the cycles of ρ; a cycle of
/// length L whose atoms have mass m contributes 2⌊L/2⌋·m (mark every other
/// atom). Atoms on one cycle always share a mass since ρ preserves measure.
Rational uniform_distance(const AlgebraAutomorphism& t0, const AlgebraAutomorphism& t1);

/// Free amalgam A ⊗ B. Atom (i, j) has index i * |B| + j and measure
/// μ_A(i) μ_B(j).
class Amalgam {
 public:
  Amalgam(FiniteAlgebra left, FiniteAlgebra right);

  const FiniteAlgebra& algebra() const { return product_; }
  const FiniteAlgebra& left() const { return left_; }
  const FiniteAlgebra& right() const { return right_; }

  std::size_t atom(std::size_t i, std::size_t j) const { return i * right_.atom_count() + j; }
  std::size_t left_index(std::size_t atom) const { return atom / right_.atom_count(); }
  std::size_t right_index(std::size_t atom) const { return atom % right_.atom_count(); }

  /// a ↦ a ⊗ 1
  Event embed_left(const Event& a) const;
  /// b ↦ 1 ⊗ b
  Event embed_right(const Event& b) const;

 private:
  FiniteAlgebra left_;
  FiniteAlgebra right_;
  FiniteAlgebra product_;
};

Amalgam free_amalgam(const FiniteAlgebra& a, const FiniteAlgebra& b);
AlgebraAutomorphism amalgam_auto(const Amalgam& amalgam, const AlgebraAutomorphism& ta,
                                 const AlgebraAutomorphism& tb);

struct RokhlinTower {
  Event base;
  /// μ(base ∨ t(base) ∨ … ∨ t^{n-1}(base)) = n·μ(base)
  Rational covered;
};

/// A maximum-measure event a with a, ta, …, t^{n-1}a pairwise disjoint.
/// On each cycle of length L ≥ n it takes ⌊L/n⌋ atoms spaced at least n
/// apart; cycles shorter than n contribute nothing.
RokhlinTower rokhlin_tower(const AlgebraAutomorphism& t, std::size_t n);

/// Whether (a, t) generates an (n, eps)-partition.
bool is_n_eps_partition(const Event& a, const AlgebraAutomorphism& t, std::size_t n,
                        const Rational& eps);

/// Total measure of the atoms moved by t^n.
Rational support_measure(const AlgebraAutomorphism& t, std::size_t n);

}  // namespace genericlab
