#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genericlab/arcs.hpp"
#include "genericlab/measure_algebra.hpp"
#include "genericlab/rational.hpp"
#include "genericlab/type_space.hpp"

namespace genericlab {

/// A rotation amount in [0, 1). Either exact, or a rational approximant of
/// an irrational value known to lie in [value, value + precision].
class RotationParam {
 public:
  static RotationParam exact(const Rational& alpha);
  static RotationParam approximant(const Rational& value, const Rational& precision, std::string label = {});
  /// frac(√radicand) truncated to `bits` binary places. Exact when the
  /// radicand is a perfect square.
  static RotationParam sqrt_frac(unsigned long radicand, unsigned bits = 100);
  /// "1/4", "0.3", or "sqrt:N".
  static RotationParam parse(const std::string& text);

  const Rational& value() const { return value_; }
  const Rational& precision() const { return precision_; }
  bool is_exact() const { return sgn(precision_) == 0; }
  const std::string& label() const { return label_; }

 private:
  RotationParam(Rational value, Rational precision, std::string label);

  Rational value_;
  Rational precision_;
  std::string label_;
};

/// Raised when an approximant cannot certify the combinatorics of a tree.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// H⁰ = [0, 1/2), H¹ = [1/2, 1).
ArcSet half_circle(int bit);

/// The set ⋂_{i<|s|} rotate(H^{s_i}, −i·α) for the bit string s.
ArcSet rotation_cell(const Rational& alpha, std::string_view bits);

/// values(s) = measure(⋂_{i<|s|} rotate(H^{s_i}, −i·α)). In precision mode
/// the endpoints {0, 1/2} − iα (i < depth) must be pairwise further apart
/// than 2·depth·precision, so the true parameter has the same cell
/// structure; otherwise PrecisionExhausted.
TypeTree rotation_type(const RotationParam& alpha, std::size_t depth);

/// Distance to the nearest integer of n·α for the stored value.
Rational lag_distance(const RotationParam& alpha, std::size_t n);

/// n ↦ μ(H Δ (H − nα)) = 2‖nα‖ on the stored value.
LagProfile rotation_profile(const RotationParam& alpha);

/// Smallest n ≤ n_max with ‖nα‖ < eps and ‖nβ − 1/2‖ < eps, where the
/// comparisons absorb n·precision so the answer holds for the true values.
std::optional<std::size_t> approx_search(const RotationParam& alpha, const RotationParam& beta, std::size_t n_max,
                                         const Rational& eps);

/// |2‖nβ‖ − 2‖nα‖|/2 minus n·(δ_α + δ_β), clamped at 0. A lower bound on
/// d_∅(p_α, p_β) valid for the true parameters.
Rational certified_separation_at(const RotationParam& alpha, const RotationParam& beta, std::size_t n);

/// Best certified_separation_at over 1 ≤ n ≤ n_max.
LagSeparation certified_separation(const RotationParam& alpha, const RotationParam& beta, std::size_t n_max);

inline constexpr std::size_t kWitnessDepthCap = 4;

struct WitnessOptions {
  /// Lags scanned per leaf pair.
  std::size_t lags = 2000;
  Rational target = Rational(1, 3);
  std::size_t depth_cap = kWitnessDepthCap;
};

class WitnessCertificationFailure : public std::runtime_error {
 public:
  WitnessCertificationFailure(const std::string& what, std::size_t left, std::size_t right)
      : std::runtime_error(what), left_(left), right_(right) {}
  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

/// Binary tree of depth D whose 2^D leaves carry distinct rotation
/// parameters frac(√p_k) for the first 2^D primes. Node s stands for the
/// set of leaves below it.
struct WitnessTree {
  std::size_t depth = 0;
  std::vector<RotationParam> leaves;
  /// separation[i][j]: certified lower bound on the distance of the leaf types.
  std::vector<std::vector<Rational>> separation;
  /// lag achieving separation[i][j].
  std::vector<std::vector<std::size_t>> lag;

  /// Leaf indices below the node with the given bit string.
  std::vector<std::size_t> node(std::string_view bits) const;
};

/// Certifies every pair of distinct leaves (each pair is a cross pair under
/// the node where their paths split) at options.target. Throws
/// WitnessCertificationFailure naming the first failing pair.
WitnessTree build_witness_tree(std::size_t depth, const WitnessOptions& options = {});

/// θ: positions of the tree → coordinates of the base algebra.
using BranchFunction = std::vector<std::size_t>;

inline constexpr std::size_t kWitnessLambdaCap = 16;

/// Base algebra of 2^λ uniform atoms with independent fixed events
/// a_i = {p : bit i of p is 0}. Member θ puts on atom p the leaf reached by
/// reading p_{θ(0)}, p_{θ(1)}, … (positions past |θ| read as 0).
class WitnessFamily {
 public:
  WitnessFamily(std::shared_ptr<const WitnessTree> tree, std::size_t lambda, std::vector<BranchFunction> thetas);

  const WitnessTree& tree() const { return *tree_; }
  std::size_t lambda() const { return lambda_; }
  const FiniteAlgebra& base() const { return base_; }
  std::size_t size() const { return thetas_.size(); }
  const BranchFunction& theta(std::size_t member) const { return thetas_.at(member); }
  /// leaf index assigned to every atom for one member.
  std::span<const std::size_t> leaves(std::size_t member) const { return leaf_of_.at(member); }

  Event coordinate_event(std::size_t i) const;
  /// b_{θ,s} = ⋀_{i<|s|} a_{θ(i)}^{s_i}
  Event branch_event(std::size_t member, std::string_view bits) const;

  /// r_θ as a type over the base algebra, with rotation trees of the given depth.
  TypeOverAlgebra member_type(std::size_t member, std::size_t depth) const;

 private:
  std::shared_ptr<const WitnessTree> tree_;
  std::size_t lambda_;
  FiniteAlgebra base_;
  std::vector<BranchFunction> thetas_;
  std::vector<std::vector<std::size_t>> leaf_of_;
};

WitnessFamily build_witness_family(const WitnessTree& tree, std::size_t lambda, std::vector<BranchFunction> thetas);

/// Every function [depth] → [lambda], in lexicographic order.
std::vector<BranchFunction> all_branch_functions(std::size_t depth, std::size_t lambda);

struct FamilyPairBound {
  std::size_t left = 0;
  std::size_t right = 0;
  Rational bound;
  bool pass = false;
};

struct FamilySeparationReport {
  Rational target;
  std::vector<FamilyPairBound> pairs;
  bool all_pass = true;
};

/// Integral lower bound Σ μ(atom)·separation(leaf_θ, leaf_θ′) for every pair.
FamilySeparationReport verify_family_separation(const WitnessFamily& family, const Rational& target);

std::string format_branch(const BranchFunction& theta);
BranchFunction parse_branch(std::string_view text);

}  // namespace genericlab
