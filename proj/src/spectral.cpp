#include "genericlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace genericlab {

ClosedCircleSet::ClosedCircleSet(ArcSet arcs, std::set<Rational> points) : arcs_(std::move(arcs)) {
  for (const auto& p : points) {
    Rational x = frac(p);
    if (!arcs_.closure_contains(x)) points_.insert(std::move(x));
  }
}

bool ClosedCircleSet::contains(const Rational& x) const {
  return arcs_.closure_contains(x) || points_.count(frac(x)) > 0;
}

ClosedCircleSet unite(const ClosedCircleSet& a, const ClosedCircleSet& b) {
  std::set<Rational> points = a.points();
  points.insert(b.points().begin(), b.points().end());
  return ClosedCircleSet(unite(a.arcs(), b.arcs()), std::move(points));
}

SpectralDatum::SpectralDatum(ClosedCircleSet essential, std::map<Rational, Multiplicity> eigen) {
  std::set<Rational> infinite;
  for (auto& [at, mult] : eigen) {
    if (sgn(at) < 0 || at >= 1) throw std::invalid_argument("eigenvalue position must lie in [0, 1)");
    if (mult && *mult == 0) throw std::invalid_argument("eigenvalue multiplicity must be positive");
    if (!mult) infinite.insert(at);
  }
  essential_ = unite(essential, ClosedCircleSet(ArcSet(), std::move(infinite)));
  eigen_ = std::move(eigen);
  // an essential point off the arcs is an eigenvalue of infinite multiplicity
  for (const auto& p : essential_.points()) eigen_[p] = kInfinite;
}

SpectralDatum SpectralDatum::points_only(const std::vector<std::pair<Rational, std::uint64_t>>& eigen) {
  std::map<Rational, Multiplicity> m;
  for (const auto& [at, mult] : eigen) {
    auto& slot = m[frac(at)];
    slot = slot.value_or(0) + mult;
  }
  return SpectralDatum(ClosedCircleSet(), std::move(m));
}

std::map<Rational, std::uint64_t> SpectralDatum::isolated() const {
  std::map<Rational, std::uint64_t> out;
  for (const auto& [at, mult] : eigen_) {
    if (mult && !essential_.contains(at)) out.emplace(at, *mult);
  }
  return out;
}

ClosedCircleSet SpectralDatum::spectrum() const {
  std::set<Rational> points;
  for (const auto& [at, mult] : eigen_) points.insert(at);
  return unite(essential_, ClosedCircleSet(ArcSet(), std::move(points)));
}

bool is_generic(const SpectralDatum& d) { return d.essential().arcs().is_full() || d.spectrum().arcs().is_full(); }

bool aue_decide(const SpectralDatum& d0, const SpectralDatum& d1) {
  return d0.essential() == d1.essential() && d0.isolated() == d1.isolated();
}

Rational circle_distance(const Rational& x, const Rational& y) { return dist_to_integer(x - y); }

double chord_length(const Rational& circle_dist) { return 2.0 * std::sin(std::numbers::pi * to_double(circle_dist)); }

namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
             std::vector<std::size_t>& match_right) {
  for (auto v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = true;
    if (match_right[v] == SIZE_MAX || augment(match_right[v], adj, seen, match_right)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

bool perfect_matching_within(const std::vector<std::vector<Rational>>& dist, const Rational& threshold) {
  const std::size_t n = dist.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] <= threshold) adj[i].push_back(j);
    }
  }
  std::vector<std::size_t> match_right(n, SIZE_MAX);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    if (!augment(u, adj, seen, match_right)) return false;
  }
  return true;
}

std::vector<Rational> expand(const SpectralDatum& d, const char* side) {
  if (!d.essential().is_empty()) {
    throw std::invalid_argument(std::string("bottleneck_distance: ") + side + " datum has an essential part");
  }
  std::vector<Rational> out;
  for (const auto& [at, mult] : d.eigen()) {
    for (std::uint64_t k = 0; k < *mult; ++k) out.push_back(at);
  }
  return out;
}

}  // namespace

Rational bottleneck_circle_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bottleneck_distance: total multiplicities differ");
  const std::size_t n = a.size();
  if (n == 0) return Rational(0);
  std::vector<Rational> x(a.begin(), a.end());
  std::vector<Rational> y(b.begin(), b.end());
  for (auto& v : x) v = frac(v);
  for (auto& v : y) v = frac(v);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());

  // cyclic shifts of the sorted orders give an upper bound
  Rational upper = Rational(1, 2);
  for (std::size_t s = 0; s < n; ++s) {
    Rational worst = 0;
    for (std::size_t i = 0; i < n && worst < upper; ++i) worst = std::max(worst, circle_distance(x[i], y[(i + s) % n]));
    upper = std::min(upper, worst);
  }

  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  std::vector<Rational> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = circle_distance(x[i], y[j]);
      if (dist[i][j] <= upper) candidates.push_back(dist[i][j]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // feasible: upper is attained by some pair
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching_within(dist, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

double bottleneck_distance(const SpectralDatum& d0, const SpectralDatum& d1) {
  return chord_length(bottleneck_circle_distance(expand(d0, "first"), expand(d1, "second")));
}

SpectralDatum direct_sum(const SpectralDatum& d0, const SpectralDatum& d1) {
  std::map<Rational, Multiplicity> eigen = d0.eigen();
  for (const auto& [at, mult] : d1.eigen()) {
    auto it = eigen.find(at);
    if (it == eigen.end()) {
      eigen.emplace(at, mult);
    } else if (!it->second || !mult) {
      it->second = kInfinite;
    } else {
      it->second = *it->second + *mult;
    }
  }
  return SpectralDatum(unite(d0.essential(), d1.essential()), std::move(eigen));
}

bool lemma16_check(const SpectralDatum& d1, const SpectralDatum& d2) {
  const ClosedCircleSet s1 = d1.spectrum();
  const ClosedCircleSet s2 = d2.spectrum();
  // closures of nondegenerate arcs: no isolated points iff nothing but arcs
  const bool perfect = s1.points().empty();
  const bool included = perfect && subset_of(s1.arcs(), s2.arcs());
  if (!(perfect && included)) return false;
  if (!aue_decide(direct_sum(d1, d2), d2)) {
    throw std::logic_error("lemma16_check: hypotheses hold but the direct sum is not equivalent");
  }
  return true;
}

std::optional<SpectralDatum> prime_extension(const SpectralDatum& d) {
  if (is_generic(d)) return std::nullopt;
  return SpectralDatum(ClosedCircleSet(complement(d.spectrum().arcs())), {});
}

}  // namespace genericlab
