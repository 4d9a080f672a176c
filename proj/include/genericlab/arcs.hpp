#pragma once

#include <span>
#include <vector>

#include "genericlab/rational.hpp"

namespace genericlab {

/// [lo, hi) on the circle ℝ/ℤ, stored with 0 ≤ lo < hi ≤ 1.
struct Arc {
  Rational lo;
  Rational hi;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A finite union of half-open arcs. Canonical form: sorted, pairwise
/// disjoint, touching arcs merged, every arc inside [0, 1]. An arc crossing
/// 0 is stored as [x, 1) and [0, y). Equal sets have equal representations.
class ArcSet {
 public:
  ArcSet() = default;

  /// Canonicalizes; each input arc needs 0 ≤ lo ≤ hi ≤ 1 (empty arcs dropped).
  explicit ArcSet(std::vector<Arc> arcs);

  static ArcSet full();
  static ArcSet interval(const Rational& lo, const Rational& hi);
  /// The arc of the given length starting at `start` (taken mod 1), wrapping
  /// through 0 when needed. Length is clamped to [0, 1].
  static ArcSet circular(const Rational& start, const Rational& length);

  std::span<const Arc> arcs() const { return arcs_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;

  /// x taken mod 1.
  bool contains(const Rational& x) const;
  /// Whether x lies in the closure, i.e. some [lo, hi] with 1 ≡ 0.
  bool closure_contains(const Rational& x) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<Arc> arcs_;
};

Rational measure(const ArcSet& a);
ArcSet unite(const ArcSet& a, const ArcSet& b);
ArcSet intersect(const ArcSet& a, const ArcSet& b);
ArcSet complement(const ArcSet& a);
ArcSet difference(const ArcSet& a, const ArcSet& b);
/// x ↦ x + delta mod 1
ArcSet rotate(const ArcSet& a, const Rational& delta);
bool subset_of(const ArcSet& a, const ArcSet& b);

}  // namespace genericlab
