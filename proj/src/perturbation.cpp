#include "genericlab/perturbation.hpp"

#include <cstdint>
#include <numeric>

namespace genericlab {

CycleSystem standard_cycle_system(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("standard_cycle_system: n_max must be positive");
  // stride[j] for coordinate j + 1 (modulus j + 1); coordinate 1 most significant
  std::vector<std::size_t> stride(n_max, 1);
  for (std::size_t j = n_max - 1; j-- > 0;) stride[j] = stride[j + 1] * (j + 2);
  const std::size_t total = stride[0];

  auto digit = [&](std::size_t index, std::size_t j) { return (index / stride[j]) % (j + 1); };

  FiniteAlgebra algebra = FiniteAlgebra::uniform(total);
  std::vector<std::size_t> perm(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t image = 0;
    for (std::size_t j = 0; j < n_max; ++j) image += ((digit(i, j) + 1) % (j + 1)) * stride[j];
    perm[i] = image;
  }
  AlgebraAutomorphism rho(algebra, std::move(perm));

  std::map<std::size_t, Event> markers;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::size_t> atoms_in;
    for (std::size_t i = 0; i < total; ++i) {
      if (digit(i, n - 1) == 0) atoms_in.push_back(i);
    }
    markers.emplace(n, Event(algebra, std::move(atoms_in)));
  }
  return {algebra, rho, std::move(markers)};
}

namespace {

bool lies_in_fresh_factor(const Amalgam& amalgam, const Event& e) {
  const auto mask = e.mask();
  const std::size_t na = amalgam.left().atom_count();
  const std::size_t nl = amalgam.right().atom_count();
  for (std::size_t j = 0; j < nl; ++j) {
    const bool first = mask[amalgam.atom(0, j)];
    for (std::size_t i = 1; i < na; ++i) {
      if (mask[amalgam.atom(i, j)] != first) return false;
    }
  }
  return true;
}

PartitionedExtension product_extension(const AlgebraAutomorphism& base_auto, const CycleSystem& cycles) {
  Amalgam amalgam(base_auto.algebra(), cycles.algebra);
  AlgebraAutomorphism tb = amalgam_auto(amalgam, base_auto, cycles.rho);
  return PartitionedExtension(std::move(amalgam), base_auto, std::move(tb), cycles.markers);
}

}  // namespace

PartitionedExtension::PartitionedExtension(const AlgebraAutomorphism& base_auto, const CycleSystem& cycles)
    : PartitionedExtension(product_extension(base_auto, cycles)) {}

PartitionedExtension::PartitionedExtension(Amalgam amalgam, AlgebraAutomorphism base_auto,
                                           AlgebraAutomorphism tb, std::map<std::size_t, Event> markers)
    : amalgam_(std::move(amalgam)),
      base_auto_(std::move(base_auto)),
      tb_(std::move(tb)),
      markers_(std::move(markers)) {
  require_same_algebra(base_auto_.algebra(), amalgam_.left(), "PartitionedExtension (base)");
  for (const auto& [n, c] : markers_) {
    require_same_algebra(c.algebra(), amalgam_.right(), "PartitionedExtension (marker)");
  }
  if (!tb_.algebra().same_as(amalgam_.algebra())) {
    throw std::invalid_argument("PartitionedExtension: extension automorphism must act on A ⊗ L");
  }
  for (std::size_t i = 0; i < base().atom_count(); ++i) {
    const Event atom(base(), {i});
    if (apply(tb_, embed(atom)) != embed(Event(base(), {base_auto_(i)}))) {
      throw std::invalid_argument("PartitionedExtension: τ_B does not extend τ_A on A ⊗ 1");
    }
  }
  for (const auto& [n, c] : markers_) {
    const Event level0 = amalgam_.embed_right(c);
    if (!is_n_eps_partition(level0, tb_, n, Rational(0))) {
      throw std::invalid_argument("PartitionedExtension: marker " + std::to_string(n) +
                                  " does not generate an exact partition");
    }
    Event level = level0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!lies_in_fresh_factor(amalgam_, level)) {
        throw std::invalid_argument("PartitionedExtension: tower level of marker " + std::to_string(n) +
                                    " leaves 1 ⊗ L");
      }
      level = apply(tb_, level);
    }
  }
}

Event PartitionedExtension::marker_event(std::size_t n) const {
  auto it = markers_.find(n);
  if (it == markers_.end()) throw std::out_of_range("no marker for n = " + std::to_string(n));
  return amalgam_.embed_right(it->second);
}

PartitionedExtension partitioned_extension(const AlgebraAutomorphism& base_auto, std::size_t n_max) {
  return PartitionedExtension(base_auto, standard_cycle_system(n_max));
}

ReferenceCycle reference_cycle(const FiniteAlgebra& fresh, std::size_t n) {
  if (n == 0) throw std::invalid_argument("reference_cycle: n must be positive");
  const std::size_t atoms = fresh.atom_count();
  if (!fresh.is_uniform()) {
    throw RefinementRequired("reference_cycle: fresh algebra must have uniform atoms", n);
  }
  if (atoms % n != 0) {
    const std::size_t factor = n / std::gcd(atoms, n);
    throw RefinementRequired("reference_cycle: " + std::to_string(atoms) + " atoms cannot carry an exact " +
                                 std::to_string(n) + "-cycle; refine by " + std::to_string(factor),
                             factor);
  }
  const std::size_t block = atoms / n;
  std::vector<std::size_t> ell(block);
  std::iota(ell.begin(), ell.end(), std::size_t{0});
  std::vector<std::size_t> perm(atoms);
  for (std::size_t i = 0; i < atoms; ++i) perm[i] = (i + block) % atoms;
  return {Event(fresh, std::move(ell)), AlgebraAutomorphism(fresh, std::move(perm))};
}

Perturbation lemma211_perturb(const PartitionedExtension& ext, std::size_t n) {
  if (n == 0) throw std::invalid_argument("lemma211_perturb: n must be positive");
  auto marker = ext.markers().find(n);
  if (marker == ext.markers().end()) throw std::out_of_range("no marker for n = " + std::to_string(n));
  const Event& c = marker->second;
  if (measure(c) != Rational(1, static_cast<unsigned long>(n))) {
    throw std::invalid_argument("lemma211_perturb: marker measure is not 1/n");
  }
  const ReferenceCycle ref = reference_cycle(ext.fresh(), n);
  if (c.size() != ref.ell.size()) {
    throw std::invalid_argument("lemma211_perturb: marker and ℓ_n have different atom counts");
  }

  const Amalgam& amalgam = ext.amalgam();
  const FiniteAlgebra& algebra = ext.algebra();
  const AlgebraAutomorphism& tb = ext.extension_auto();
  const AlgebraAutomorphism tb_inv = inverse(tb);
  AlgebraAutomorphism model = amalgam_auto(amalgam, ext.base_auto(), ref.rho_n);

  // θ₀: k-th atom of c ↦ k-th atom of ℓ_n
  std::vector<std::size_t> theta0(ext.fresh().atom_count(), SIZE_MAX);
  for (std::size_t k = 0; k < c.size(); ++k) theta0[c.atoms()[k]] = ref.ell.atoms()[k];

  const std::vector<std::size_t> level = tower_levels(ext, n);

  std::vector<std::size_t> theta2(algebra.atom_count());
  for (std::size_t b = 0; b < algebra.atom_count(); ++b) {
    const std::size_t k = level[b];
    std::size_t y = b;
    for (std::size_t step = 0; step < k; ++step) y = tb_inv(y);
    std::size_t z = amalgam.atom(amalgam.left_index(y), theta0[amalgam.right_index(y)]);
    for (std::size_t step = 0; step < k; ++step) z = model(z);
    theta2[b] = z;
  }
  AlgebraAutomorphism theta(algebra, std::move(theta2));
  AlgebraAutomorphism perturbed = compose(inverse(theta), compose(model, theta));
  Rational distance = uniform_distance(tb, perturbed);
  return {n, std::move(theta), std::move(perturbed), std::move(model), std::move(distance)};
}

std::vector<std::size_t> tower_levels(const PartitionedExtension& ext, std::size_t n) {
  const AlgebraAutomorphism& tb = ext.extension_auto();
  std::vector<std::size_t> level(ext.algebra().atom_count(), SIZE_MAX);
  Event slice = ext.marker_event(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (auto b : slice.atoms()) level[b] = k;
    slice = apply(tb, slice);
  }
  return level;
}

bool agrees_below_top_level(const PartitionedExtension& ext, const Perturbation& p) {
  const auto level = tower_levels(ext, p.n);
  const AlgebraAutomorphism& tb = ext.extension_auto();
  for (std::size_t b = 0; b < level.size(); ++b) {
    if (level[b] + 1 < p.n && tb(b) != p.perturbed(b)) return false;
  }
  return true;
}

bool fixes_base(const PartitionedExtension& ext, const AlgebraAutomorphism& theta) {
  for (std::size_t i = 0; i < ext.base().atom_count(); ++i) {
    const Event lifted = ext.embed(Event(ext.base(), {i}));
    if (apply(theta, lifted) != lifted) return false;
  }
  return true;
}

bool is_r_perturbation(const AlgebraAutomorphism& f, const AlgebraAutomorphism& t0,
                       const AlgebraAutomorphism& t1, const Rational& r) {
  require_same_algebra(f.algebra(), t0.algebra(), "is_r_perturbation");
  require_same_algebra(f.algebra(), t1.algebra(), "is_r_perturbation");
  const auto conjugated = compose(f, compose(t0, inverse(f)));
  return uniform_distance(conjugated, t1) <= r;
}

ChainedPerturbation chain_perturbations(const PartitionedExtension& b, const PartitionedExtension& c,
                                        std::size_t n) {
  require_same_algebra(b.algebra(), c.algebra(), "chain_perturbations");
  const Perturbation pb = lemma211_perturb(b, n);
  const Perturbation pc = lemma211_perturb(c, n);
  AlgebraAutomorphism f = compose(inverse(pc.theta2), pb.theta2);
  const auto conjugated = compose(f, compose(b.extension_auto(), inverse(f)));
  Rational distance = uniform_distance(conjugated, c.extension_auto());
  return {std::move(f), std::move(distance), pb.distance, pc.distance};
}

}  // namespace genericlab
