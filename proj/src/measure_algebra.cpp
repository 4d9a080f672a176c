#include "genericlab/measure_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace genericlab {

FiniteAlgebra::FiniteAlgebra(std::vector<Rational> measures) {
  if (measures.empty()) throw std::invalid_argument("algebra needs at least one atom");
  // summed run by run: uniform algebras with 10^5 atoms cost one multiply
  Rational total = 0;
  std::size_t run_start = 0;
  for (std::size_t i = 0; i < measures.size(); ++i) {
    measures[i].canonicalize();
    if (sgn(measures[i]) <= 0) throw std::invalid_argument("atom measure must be positive");
    if (measures[i] != measures[run_start]) {
      total += measures[run_start] * static_cast<unsigned long>(i - run_start);
      run_start = i;
    }
  }
  total += measures[run_start] * static_cast<unsigned long>(measures.size() - run_start);
  if (total != 1) {
    throw std::invalid_argument("atom measures sum to " + to_fraction_string(total) + ", not 1");
  }
  auto data = std::make_shared<Data>();
  data->uniform = std::all_of(measures.begin(), measures.end(),
                              [&](const Rational& m) { return m == measures.front(); });
  data->measures = std::move(measures);
  data_ = std::move(data);
}

FiniteAlgebra FiniteAlgebra::uniform(std::size_t atoms) {
  if (atoms == 0) throw std::invalid_argument("algebra needs at least one atom");
  const Rational m(1, static_cast<unsigned long>(atoms));
  return FiniteAlgebra(std::vector<Rational>(atoms, m));
}

void require_same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b, const char* context) {
  if (!a.same_as(b)) throw AlgebraMismatch(std::string(context) + ": operands live over different algebras");
}

Event::Event(FiniteAlgebra algebra, std::vector<std::size_t> atoms)
    : algebra_(std::move(algebra)), atoms_(std::move(atoms)) {
  if (std::adjacent_find(atoms_.begin(), atoms_.end(), std::greater_equal<>()) != atoms_.end()) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }
  if (!atoms_.empty() && atoms_.back() >= algebra_.atom_count()) {
    throw std::out_of_range("event atom index " + std::to_string(atoms_.back()) + " out of range");
  }
}

Event Event::empty(const FiniteAlgebra& algebra) { return Event(algebra, {}, Trusted{}); }

Event Event::full(const FiniteAlgebra& algebra) {
  std::vector<std::size_t> all(algebra.atom_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Event(algebra, std::move(all), Trusted{});
}

bool Event::contains(std::size_t atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::vector<bool> Event::mask() const {
  std::vector<bool> m(algebra_.atom_count(), false);
  for (auto i : atoms_) m[i] = true;
  return m;
}

Event event_from_mask(const FiniteAlgebra& algebra, const std::vector<bool>& mask) {
  if (mask.size() != algebra.atom_count()) throw std::invalid_argument("mask size does not match algebra");
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) atoms.push_back(i);
  }
  return Event(algebra, std::move(atoms), Event::Trusted{});
}

Rational measure(const Event& e) {
  if (e.algebra().is_uniform()) {
    return Rational(static_cast<unsigned long>(e.size())) * e.algebra().atom_measure(0);
  }
  Rational total = 0;
  for (auto i : e.atoms()) total += e.algebra().atom_measure(i);
  return total;
}

Event complement(const Event& e) {
  auto m = e.mask();
  m.flip();
  return event_from_mask(e.algebra(), m);
}

Event intersect(const Event& a, const Event& b) {
  require_same_algebra(a.algebra(), b.algebra(), "intersect");
  std::vector<std::size_t> out;
  std::set_intersection(a.atoms().begin(), a.atoms().end(), b.atoms().begin(), b.atoms().end(),
                        std::back_inserter(out));
  return Event(a.algebra(), std::move(out));
}

Event unite(const Event& a, const Event& b) {
  require_same_algebra(a.algebra(), b.algebra(), "unite");
  std::vector<std::size_t> out;
  std::set_union(a.atoms().begin(), a.atoms().end(), b.atoms().begin(), b.atoms().end(),
                 std::back_inserter(out));
  return Event(a.algebra(), std::move(out));
}

Event sym_diff(const Event& a, const Event& b) {
  require_same_algebra(a.algebra(), b.algebra(), "sym_diff");
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.atoms().begin(), a.atoms().end(), b.atoms().begin(), b.atoms().end(),
                                std::back_inserter(out));
  return Event(a.algebra(), std::move(out));
}

bool disjoint(const Event& a, const Event& b) { return intersect(a, b).is_empty(); }

Rational sym_diff_distance(const Event& a, const Event& b) { return measure(sym_diff(a, b)); }

AlgebraAutomorphism::AlgebraAutomorphism(FiniteAlgebra algebra, std::vector<std::size_t> perm)
    : algebra_(std::move(algebra)), perm_(std::move(perm)) {
  const std::size_t n = algebra_.atom_count();
  if (perm_.size() != n) throw std::invalid_argument("permutation length does not match atom count");
  std::vector<bool> seen(n, false);
  for (auto j : perm_) {
    if (j >= n || seen[j]) throw std::invalid_argument("automorphism is not a bijection of atoms");
    seen[j] = true;
  }
  if (!algebra_.is_uniform()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (algebra_.atom_measure(i) != algebra_.atom_measure(perm_[i])) {
        throw std::invalid_argument("automorphism moves atom " + std::to_string(i) +
                                    " to an atom of different measure");
      }
    }
  }
}

AlgebraAutomorphism AlgebraAutomorphism::identity(const FiniteAlgebra& algebra) {
  std::vector<std::size_t> p(algebra.atom_count());
  std::iota(p.begin(), p.end(), std::size_t{0});
  return AlgebraAutomorphism(algebra, std::move(p), Trusted{});
}

AlgebraAutomorphism AlgebraAutomorphism::cyclic_shift(const FiniteAlgebra& algebra) {
  const std::size_t n = algebra.atom_count();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return AlgebraAutomorphism(algebra, std::move(p));
}

bool AlgebraAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

Event apply(const AlgebraAutomorphism& t, const Event& e) {
  require_same_algebra(t.algebra(), e.algebra(), "apply");
  std::vector<std::size_t> image;
  image.reserve(e.size());
  const std::size_t n = e.algebra().atom_count();
  if (e.size() * 16 < n) {
    for (auto i : e.atoms()) image.push_back(t(i));
    std::sort(image.begin(), image.end());
  } else {
    // dense events: mark and sweep instead of sorting
    std::vector<char> hit(n, 0);
    for (auto i : e.atoms()) hit[t(i)] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (hit[i]) image.push_back(i);
    }
  }
  return Event(e.algebra(), std::move(image), Event::Trusted{});
}

AlgebraAutomorphism compose(const AlgebraAutomorphism& outer, const AlgebraAutomorphism& inner) {
  require_same_algebra(outer.algebra(), inner.algebra(), "compose");
  std::vector<std::size_t> p(inner.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = outer.perm_[inner.perm_[i]];
  return AlgebraAutomorphism(inner.algebra_, std::move(p), AlgebraAutomorphism::Trusted{});
}

AlgebraAutomorphism inverse(const AlgebraAutomorphism& t) {
  std::vector<std::size_t> p(t.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[t.perm_[i]] = i;
  return AlgebraAutomorphism(t.algebra_, std::move(p), AlgebraAutomorphism::Trusted{});
}

AlgebraAutomorphism power(const AlgebraAutomorphism& t, std::int64_t n) {
  std::vector<std::size_t> p(t.perm_.size());
  for (const auto& cycle : cycles(t)) {
    const auto len = static_cast<std::int64_t>(cycle.size());
    const std::int64_t shift = ((n % len) + len) % len;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[cycle[k]] = cycle[static_cast<std::size_t>((static_cast<std::int64_t>(k) + shift) % len)];
    }
  }
  return AlgebraAutomorphism(t.algebra_, std::move(p), AlgebraAutomorphism::Trusted{});
}

std::vector<std::vector<std::size_t>> cycles(const AlgebraAutomorphism& t) {
  const std::size_t n = t.algebra().atom_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = t(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Rational uniform_distance(const AlgebraAutomorphism& t0, const AlgebraAutomorphism& t1) {
  require_same_algebra(t0.algebra(), t1.algebra(), "uniform_distance");
  const auto rho = compose(inverse(t0), t1);
  const auto& algebra = t0.algebra();
  Rational total = 0;
  for (const auto& cycle : cycles(rho)) {
    const std::size_t marked = 2 * (cycle.size() / 2);
    if (marked == 0) continue;
    total += Rational(static_cast<unsigned long>(marked)) * algebra.atom_measure(cycle.front());
  }
  return total;
}

Amalgam::Amalgam(FiniteAlgebra left, FiniteAlgebra right)
    : left_(std::move(left)), right_(std::move(right)), product_([&] {
        if (left_.is_uniform() && right_.is_uniform()) {
          return FiniteAlgebra::uniform(left_.atom_count() * right_.atom_count());
        }
        std::vector<Rational> m;
        m.reserve(left_.atom_count() * right_.atom_count());
        for (const auto& a : left_.measures()) {
          for (const auto& b : right_.measures()) m.push_back(a * b);
        }
        return FiniteAlgebra(std::move(m));
      }()) {}

Event Amalgam::embed_left(const Event& a) const {
  require_same_algebra(a.algebra(), left_, "embed_left");
  std::vector<std::size_t> atoms;
  atoms.reserve(a.size() * right_.atom_count());
  for (auto i : a.atoms()) {
    for (std::size_t j = 0; j < right_.atom_count(); ++j) atoms.push_back(atom(i, j));
  }
  return Event(product_, std::move(atoms));
}

Event Amalgam::embed_right(const Event& b) const {
  require_same_algebra(b.algebra(), right_, "embed_right");
  std::vector<std::size_t> atoms;
  atoms.reserve(b.size() * left_.atom_count());
  for (std::size_t i = 0; i < left_.atom_count(); ++i) {
    for (auto j : b.atoms()) atoms.push_back(atom(i, j));
  }
  return Event(product_, std::move(atoms));
}

Amalgam free_amalgam(const FiniteAlgebra& a, const FiniteAlgebra& b) { return Amalgam(a, b); }

AlgebraAutomorphism amalgam_auto(const Amalgam& amalgam, const AlgebraAutomorphism& ta,
                                 const AlgebraAutomorphism& tb) {
  require_same_algebra(ta.algebra(), amalgam.left(), "amalgam_auto (left)");
  require_same_algebra(tb.algebra(), amalgam.right(), "amalgam_auto (right)");
  const std::size_t na = amalgam.left().atom_count();
  const std::size_t nb = amalgam.right().atom_count();
  std::vector<std::size_t> p(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) p[amalgam.atom(i, j)] = amalgam.atom(ta(i), tb(j));
  }
  return AlgebraAutomorphism(amalgam.algebra(), std::move(p));
}

RokhlinTower rokhlin_tower(const AlgebraAutomorphism& t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("rokhlin_tower: n must be positive");
  const auto& algebra = t.algebra();
  std::vector<std::size_t> base;
  for (const auto& cycle : cycles(t)) {
    if (cycle.size() < n) continue;
    const std::size_t count = cycle.size() / n;
    for (std::size_t k = 0; k < count; ++k) base.push_back(cycle[k * n]);
  }
  Event a(algebra, std::move(base));
  Rational covered = Rational(static_cast<unsigned long>(n)) * measure(a);
  return {std::move(a), std::move(covered)};
}

bool is_n_eps_partition(const Event& a, const AlgebraAutomorphism& t, std::size_t n,
                        const Rational& eps) {
  require_same_algebra(a.algebra(), t.algebra(), "is_n_eps_partition");
  if (n == 0) throw std::invalid_argument("is_n_eps_partition: n must be positive");
  std::vector<bool> covered(a.algebra().atom_count(), false);
  std::vector<std::size_t> level(a.atoms().begin(), a.atoms().end());
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& atom : level) {
      if (covered[atom]) return false;
      covered[atom] = true;
    }
    for (auto& atom : level) atom = t(atom);
  }
  return measure(event_from_mask(a.algebra(), covered)) >= 1 - eps;
}

Rational support_measure(const AlgebraAutomorphism& t, std::size_t n) {
  const auto tn = power(t, static_cast<std::int64_t>(n));
  std::vector<bool> moved(t.algebra().atom_count(), false);
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] = tn(i) != i;
  return measure(event_from_mask(t.algebra(), moved));
}

}  // namespace genericlab
