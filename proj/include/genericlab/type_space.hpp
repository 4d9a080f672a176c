#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genericlab/exact_lp.hpp"
#include "genericlab/measure_algebra.hpp"
#include "genericlab/rational.hpp"

namespace genericlab {

/// Thrown when a tree fails the shift-invariance identities where they are
/// a precondition.
class SiViolation : public std::invalid_argument {
 public:
  explicit SiViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A depth-truncated map from binary strings to rationals. Level k holds the
/// 2^k values for strings of length k; s_0 is the most significant bit of
/// the index, so s⌢0 = 2·idx, s⌢1 = 2·idx + 1, 1⌢s = idx + 2^k.
class TypeTree {
 public:
  explicit TypeTree(std::vector<std::vector<Rational>> levels);

  std::size_t depth() const { return levels_.size() - 1; }
  std::span<const Rational> level(std::size_t length) const { return levels_.at(length); }
  const Rational& value(std::size_t length, std::size_t index) const { return levels_.at(length).at(index); }
  /// value("0110")
  const Rational& value(std::string_view bits) const;

  TypeTree truncate(std::size_t depth) const;

  friend bool operator==(const TypeTree& a, const TypeTree& b) { return a.levels_ == b.levels_; }

 private:
  std::vector<std::vector<Rational>> levels_;
};

/// Root is 1, all values in [0,1], and for every s shorter than the depth
///   values(s⌢0) + values(s⌢1) = values(0⌢s) + values(1⌢s) = values(s).
bool validate_si(const TypeTree& t);

/// values(s) = μ(⋀_{i<|s|} tⁱ(a^{s_i})) with a^0 = a, a^1 = complement.
TypeTree type_of(const Event& a, const AlgebraAutomorphism& t, std::size_t depth);

struct Realization {
  FiniteAlgebra algebra;
  /// a_0, …, a_depth
  std::vector<Event> events;
};

/// One atom per string of length depth + 1 with positive mass, events
/// a_k = {s : s_k = 0}. The last level is the Markov extension
///   v(s₀…s_d) = v(s₀…s_{d−1}) · v(s₁…s_d) / v(s₁…s_{d−1}),
/// which is shift invariant whenever the tree is, so every window of depth
/// consecutive events reproduces the tree. Throws SiViolation.
Realization realize(const TypeTree& t);

/// values(s) = μ(⋀_{i<|s|} events[offset + i]^{s_i}) for |s| ≤ depth.
TypeTree window_tree(std::span<const Event> events, std::size_t offset, std::size_t depth);

/// μ(a Δ τⁿa) read off the tree: the mass of strings of length n + 1 whose
/// first and last letters differ. Requires n + 1 ≤ depth.
Rational autodist_profile(const TypeTree& t, std::size_t n);

/// Joint tree of a pair (a, b) over letters 0..3, letter = 2·[a-bit] + [b-bit]
/// where a-bit 0 means "in a". Level k holds 4^k values.
class PairTree {
 public:
  explicit PairTree(std::vector<std::vector<Rational>> levels);
  /// Builds all levels by summing the top level over trailing letters.
  static PairTree from_top_level(std::size_t depth, std::vector<Rational> top);

  std::size_t depth() const { return levels_.size() - 1; }
  std::span<const Rational> level(std::size_t length) const { return levels_.at(length); }

  /// 0 selects the a-coordinate, 1 the b-coordinate.
  TypeTree marginal(int coordinate) const;
  /// Mass on root letters 01 and 10, i.e. μ(a Δ b).
  Rational root_disagreement() const;

 private:
  std::vector<std::vector<Rational>> levels_;
};

bool validate_pair_si(const PairTree& t);

/// Exact joint tree of two events under a common automorphism.
PairTree pair_type_of(const Event& a, const Event& b, const AlgebraAutomorphism& t, std::size_t depth);

struct CouplingBound {
  Rational bound;
  /// Optimal coupling (for audit).
  PairTree coupling;
  std::size_t pivots = 0;
};

inline constexpr std::size_t kDefaultCouplingDepthCap = 5;

/// The program behind coupling_lower_bound: one variable per pair string
/// of length m, stationarity rows at length m, marginal rows for p and q.
LinearProgram coupling_program(const TypeTree& p, const TypeTree& q, std::size_t m);

/// min over depth-m pair trees with marginals p and q of the root
/// disagreement mass. Every common realization (a, b) of p, q induces a
/// feasible pair tree, so this lower-bounds μ(a Δ b) and hence d_∅(p, q).
/// Solved exactly; throws std::invalid_argument if m exceeds either depth or
/// `depth_cap`, std::logic_error if the program is infeasible.
CouplingBound coupling_lower_bound(const TypeTree& p, const TypeTree& q, std::size_t m,
                                   std::size_t depth_cap = kDefaultCouplingDepthCap);

/// n ↦ μ(a Δ τⁿa) for some realization a of a type.
using LagProfile = std::function<Rational(std::size_t)>;

LagProfile tree_profile(const TypeTree& t);

struct LagSeparation {
  Rational bound;
  /// Lag achieving the bound (0 when no lag helps).
  std::size_t lag = 0;
};

/// max over 1 ≤ n ≤ n_max of |q(n) − p(n)| / 2, clamped at 0. From
///   2·d(a,b) = d(a,b) + d(τⁿa,τⁿb) ≥ |d(b,τⁿb) − d(a,τⁿa)|.
LagSeparation best_lag_separation(const LagProfile& p, const LagProfile& q, std::size_t n_max);

/// Same bound on explicit trees; requires both depths ≥ n_max + 1.
Rational separation_bound(const TypeTree& p, const TypeTree& q, std::size_t n_max);

/// A type over a finite algebra A of τ-fixed events: one tree per atom of A.
class TypeOverAlgebra {
 public:
  TypeOverAlgebra(FiniteAlgebra base, std::vector<TypeTree> per_atom);

  const FiniteAlgebra& base() const { return base_; }
  std::span<const TypeTree> per_atom() const { return per_atom_; }
  const TypeTree& at(std::size_t atom) const { return per_atom_.at(atom); }
  std::size_t depth() const { return per_atom_.front().depth(); }

  /// Σ μ(atom) · tree(atom); the unconditional type.
  TypeTree average() const;

 private:
  FiniteAlgebra base_;
  std::vector<TypeTree> per_atom_;
};

/// Conditional type of b given the partition `blocks` (each block
/// t-invariant, together covering the algebra). The base algebra has one
/// atom per block with the block's measure.
TypeOverAlgebra type_over_algebra(const Event& b, const AlgebraAutomorphism& t, std::span<const Event> blocks,
                                  std::size_t depth);

/// Σ over atoms of μ(atom) · bound(p_atom, q_atom).
template <class Item, class Bounder>
Rational integral_lower_bound(const FiniteAlgebra& base, std::span<const Item> p, std::span<const Item> q,
                              Bounder&& bound) {
  if (p.size() != base.atom_count() || q.size() != base.atom_count()) {
    throw std::invalid_argument("integral_lower_bound: per-atom data does not match base algebra");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += base.atom_measure(i) * bound(p[i], q[i]);
  return total;
}

using TreeBounder = std::function<Rational(const TypeTree&, const TypeTree&)>;

Rational integral_lower_bound(const TypeOverAlgebra& p, const TypeOverAlgebra& q, const TreeBounder& bound);

}  // namespace genericlab
