#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "genericlab/arcs.hpp"
#include "genericlab/rational.hpp"

namespace genericlab {

/// A closed subset of the circle: the closure of a canonical arc union plus
/// finitely many points. Points lying in the closure of the arcs are
/// dropped, so equal sets have equal representations.
class ClosedCircleSet {
 public:
  ClosedCircleSet() = default;
  explicit ClosedCircleSet(ArcSet arcs, std::set<Rational> points = {});

  const ArcSet& arcs() const { return arcs_; }
  /// Points outside the closure of the arcs, each in [0, 1).
  const std::set<Rational>& points() const { return points_; }

  bool is_empty() const { return arcs_.is_empty() && points_.empty(); }
  bool contains(const Rational& x) const;

  friend bool operator==(const ClosedCircleSet&, const ClosedCircleSet&) = default;

 private:
  ArcSet arcs_;
  std::set<Rational> points_;
};

ClosedCircleSet unite(const ClosedCircleSet& a, const ClosedCircleSet& b);

/// Eigenvalue multiplicity; nullopt stands for ∞.
using Multiplicity = std::optional<std::uint64_t>;
inline constexpr Multiplicity kInfinite = std::nullopt;

/// Spectrum of a unitary: essential part plus eigenvalues (positions in
/// [0, 1), one turn = 1) with multiplicities. Infinite-multiplicity
/// eigenvalues are folded into the essential part. A datum with nothing in
/// it stands for the zero space.
class SpectralDatum {
 public:
  SpectralDatum() = default;
  SpectralDatum(ClosedCircleSet essential, std::map<Rational, Multiplicity> eigen);

  static SpectralDatum points_only(const std::vector<std::pair<Rational, std::uint64_t>>& eigen);

  const ClosedCircleSet& essential() const { return essential_; }
  const std::map<Rational, Multiplicity>& eigen() const { return eigen_; }

  /// Eigenvalues outside the essential part, all of finite multiplicity.
  std::map<Rational, std::uint64_t> isolated() const;

  /// σ = essential ∪ eigenvalues
  ClosedCircleSet spectrum() const;

  friend bool operator==(const SpectralDatum&, const SpectralDatum&) = default;

 private:
  ClosedCircleSet essential_;
  std::map<Rational, Multiplicity> eigen_;
};

/// σ = S¹.
bool is_generic(const SpectralDatum& d);

/// Equal essential parts and equal multiplicities at every point off them.
bool aue_decide(const SpectralDatum& d0, const SpectralDatum& d1);

/// Minimum over multiplicity-respecting bijections of the largest chord
/// 2·sin(π·circledist) between matched eigenvalues. Throws
/// std::invalid_argument when either datum has an essential part or the
/// total multiplicities differ.
double bottleneck_distance(const SpectralDatum& d0, const SpectralDatum& d1);

/// Same problem on explicit point lists (repeated entries for multiplicity);
/// returns the optimal circular distance exactly.
Rational bottleneck_circle_distance(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Distance along the circle, in [0, 1/2].
Rational circle_distance(const Rational& x, const Rational& y);
double chord_length(const Rational& circle_dist);

SpectralDatum direct_sum(const SpectralDatum& d0, const SpectralDatum& d1);

/// σ(d1) ⊆ σ(d2) and σ(d1) has no isolated points. When both hold the
/// direct sum d1 ⊕ d2 is checked to be equivalent to d2; a failure there
/// raises std::logic_error.
bool lemma16_check(const SpectralDatum& d1, const SpectralDatum& d2);

/// nullopt when d is already generic; otherwise the datum whose essential
/// part is the closure of S¹ ∖ σ(d), so that d ⊕ result is generic.
std::optional<SpectralDatum> prime_extension(const SpectralDatum& d);

}  // namespace genericlab
