#include "genericlab/arcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace genericlab {

namespace {

std::vector<Arc> canonical(std::vector<Arc> arcs) {
  std::erase_if(arcs, [](const Arc& a) { return a.lo == a.hi; });
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  std::vector<Arc> out;
  for (auto& a : arcs) {
    if (!out.empty() && a.lo <= out.back().hi) {
      if (a.hi > out.back().hi) out.back().hi = a.hi;
    } else {
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace

ArcSet::ArcSet(std::vector<Arc> arcs) {
  for (auto& a : arcs) {
    a.lo.canonicalize();
    a.hi.canonicalize();
    if (sgn(a.lo) < 0 || a.hi > 1 || a.lo > a.hi) {
      throw std::invalid_argument("arc [" + to_fraction_string(a.lo) + ", " + to_fraction_string(a.hi) +
                                  ") is not inside [0, 1]");
    }
  }
  arcs_ = canonical(std::move(arcs));
}

ArcSet ArcSet::full() { return ArcSet({Arc{Rational(0), Rational(1)}}); }

ArcSet ArcSet::interval(const Rational& lo, const Rational& hi) { return ArcSet({Arc{lo, hi}}); }

ArcSet ArcSet::circular(const Rational& start, const Rational& length) {
  if (sgn(length) <= 0) return ArcSet();
  if (length >= 1) return full();
  const Rational lo = frac(start);
  const Rational hi = lo + length;
  if (hi <= 1) return ArcSet({Arc{lo, hi}});
  return ArcSet({Arc{lo, Rational(1)}, Arc{Rational(0), Rational(hi - 1)}});
}

bool ArcSet::is_full() const { return arcs_.size() == 1 && sgn(arcs_[0].lo) == 0 && arcs_[0].hi == 1; }

bool ArcSet::contains(const Rational& x) const {
  const Rational y = frac(x);
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.lo <= y && y < a.hi; });
}

bool ArcSet::closure_contains(const Rational& x) const {
  const Rational y = frac(x);
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) {
    return (a.lo <= y && y <= a.hi) || (sgn(y) == 0 && a.hi == 1);
  });
}

Rational measure(const ArcSet& a) {
  Rational total = 0;
  for (const auto& arc : a.arcs()) total += arc.hi - arc.lo;
  return total;
}

ArcSet unite(const ArcSet& a, const ArcSet& b) {
  std::vector<Arc> all(a.arcs().begin(), a.arcs().end());
  all.insert(all.end(), b.arcs().begin(), b.arcs().end());
  return ArcSet(std::move(all));
}

ArcSet intersect(const ArcSet& a, const ArcSet& b) {
  std::vector<Arc> out;
  auto x = a.arcs();
  auto y = b.arcs();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = std::max(x[i].lo, y[j].lo);
    const Rational& hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return ArcSet(std::move(out));
}

ArcSet complement(const ArcSet& a) {
  std::vector<Arc> out;
  Rational cursor = 0;
  for (const auto& arc : a.arcs()) {
    if (cursor < arc.lo) out.push_back({cursor, arc.lo});
    cursor = arc.hi;
  }
  if (cursor < 1) out.push_back({cursor, Rational(1)});
  return ArcSet(std::move(out));
}

ArcSet difference(const ArcSet& a, const ArcSet& b) { return intersect(a, complement(b)); }

ArcSet rotate(const ArcSet& a, const Rational& delta) {
  const Rational shift = frac(delta);
  if (sgn(shift) == 0) return a;
  std::vector<Arc> out;
  for (const auto& arc : a.arcs()) {
    Rational lo = arc.lo + shift;
    Rational hi = arc.hi + shift;
    if (hi <= 1) {
      out.push_back({std::move(lo), std::move(hi)});
    } else if (lo >= 1) {
      out.push_back({Rational(lo - 1), Rational(hi - 1)});
    } else {
      out.push_back({std::move(lo), Rational(1)});
      out.push_back({Rational(0), Rational(hi - 1)});
    }
  }
  return ArcSet(std::move(out));
}

bool subset_of(const ArcSet& a, const ArcSet& b) { return difference(a, b).is_empty(); }

}  // namespace genericlab
