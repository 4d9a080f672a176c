#include "genericlab/perturbation.hpp"

#include <numeric>

#include "helpers.hpp"

using namespace genericlab;
using testing::event;
using testing::perm;
using testing::q;

namespace {

std::size_t lcm_upto(std::size_t n) {
  std::size_t l = 1;
  for (std::size_t k = 1; k <= n; ++k) l = std::lcm(l, k);
  return l;
}

bool exact_partition(const Event& marker, const AlgebraAutomorphism& t, std::size_t n) {
  return is_n_eps_partition(marker, t, n, 0);
}

}  // namespace

TEST_CASE("standard cycle systems") {
  const auto one = standard_cycle_system(1);
  CHECK(one.algebra.atom_count() == 1);
  CHECK(one.markers.at(1) == Event::full(one.algebra));
  CHECK(exact_partition(one.markers.at(1), one.rho, 1));

  const auto three = standard_cycle_system(3);
  CHECK(three.algebra.atom_count() == 6);
  CHECK(exact_partition(three.markers.at(2), three.rho, 2));
  CHECK(exact_partition(three.markers.at(3), three.rho, 3));

  for (std::size_t n = 1; n <= 5; ++n) {
    const auto cs = standard_cycle_system(n);
    CHECK(power(cs.rho, static_cast<std::int64_t>(lcm_upto(n))).is_identity());
    for (const auto& [k, marker] : cs.markers) CHECK(exact_partition(marker, cs.rho, k));
  }
  CHECK_THROWS(standard_cycle_system(0));
}

TEST_CASE("partitioned extension over small bases") {
  const auto a1 = FiniteAlgebra::uniform(1);
  const auto cs = standard_cycle_system(3);
  const PartitionedExtension trivial(AlgebraAutomorphism::identity(a1), cs);
  CHECK(trivial.algebra().atom_count() == cs.algebra.atom_count());
  CHECK(trivial.extension_auto().perm().size() == cs.rho.perm().size());
  CHECK(std::equal(trivial.extension_auto().perm().begin(), trivial.extension_auto().perm().end(),
                   cs.rho.perm().begin()));

  const auto a2 = FiniteAlgebra::uniform(2);
  const auto ext = partitioned_extension(perm(a2, {1, 0}), 2);
  CHECK(ext.algebra().atom_count() == 4);
  CHECK(exact_partition(ext.marker_event(2), ext.extension_auto(), 2));
  CHECK(measure(ext.embed(event(a2, {0}))) == q(1, 2));

  const FiniteAlgebra mixed({q(1, 2), q(1, 3), q(1, 6)});
  const auto ext3 = partitioned_extension(AlgebraAutomorphism::identity(mixed), 4);
  for (std::size_t i = 0; i < 3; ++i) CHECK(measure(ext3.embed(event(mixed, {i}))) == mixed.atom_measure(i));
  CHECK_THROWS_AS(ext3.marker_event(7), std::out_of_range);
}

TEST_CASE("general partitioned extension validates its input") {
  const auto a2 = FiniteAlgebra::uniform(2);
  const auto swap = perm(a2, {1, 0});
  const auto cs = standard_cycle_system(2);
  const auto am = free_amalgam(a2, cs.algebra);
  const auto tb = amalgam_auto(am, swap, cs.rho);
  CHECK_NOTHROW(PartitionedExtension(am, swap, tb, cs.markers));
  // τ_B that does not extend τ_A
  const auto wrong = amalgam_auto(am, AlgebraAutomorphism::identity(a2), cs.rho);
  CHECK_THROWS_AS(PartitionedExtension(am, swap, wrong, cs.markers), std::invalid_argument);
  // a marker that is not an exact partition
  auto bad = cs.markers;
  bad.insert_or_assign(2, Event::full(cs.algebra));
  CHECK_THROWS_AS(PartitionedExtension(am, swap, tb, bad), std::invalid_argument);
}

TEST_CASE("reference cycle") {
  const auto l = FiniteAlgebra::uniform(6);
  const auto ref = reference_cycle(l, 3);
  CHECK(ref.ell == event(l, {0, 1}));
  CHECK(power(ref.rho_n, 3).is_identity());
  CHECK(exact_partition(ref.ell, ref.rho_n, 3));
  CHECK_THROWS_AS(reference_cycle(l, 4), RefinementRequired);
  try {
    reference_cycle(l, 4);
  } catch (const RefinementRequired& e) {
    CHECK((6 * e.factor()) % 4 == 0);
  }
  CHECK_THROWS_AS(reference_cycle(FiniteAlgebra({q(1, 2), q(1, 4), q(1, 4)}), 2), RefinementRequired);
}

TEST_CASE("single tower level perturbation") {
  const auto a2 = FiniteAlgebra::uniform(2);
  const auto ext = partitioned_extension(perm(a2, {1, 0}), 3);
  const auto p = lemma211_perturb(ext, 1);
  // one level: θ₂ is the identity and τ′_B is the model itself
  CHECK(p.theta2.is_identity());
  CHECK(p.perturbed == p.model);
  CHECK(p.distance == uniform_distance(ext.extension_auto(), p.model));
  CHECK(fixes_base(ext, p.theta2));
  CHECK(p.perturbed == compose(inverse(p.theta2), compose(p.model, p.theta2)));
}

TEST_CASE("two-cycle extension of the trivial base") {
  const auto a1 = FiniteAlgebra::uniform(1);
  const PartitionedExtension ext(AlgebraAutomorphism::identity(a1), standard_cycle_system(2));
  const auto p = lemma211_perturb(ext, 2);
  CHECK(p.distance <= q(1, 4));
  CHECK(uniform_distance(ext.extension_auto(), p.perturbed) == p.distance);
  CHECK(fixes_base(ext, p.theta2));
}

TEST_CASE("perturbation structure over random small bases") {
  cli::Rng rng(2);
  for (std::size_t atoms : {1U, 2U, 3U}) {
    const auto a = FiniteAlgebra::uniform(atoms);
    for (int trial = 0; trial < 2; ++trial) {
      const auto ta = cli::random_automorphism(a, rng);
      const auto ext = partitioned_extension(ta, 8);
      for (std::size_t n = 2; n <= 8; ++n) {
        CAPTURE(atoms);
        CAPTURE(n);
        const auto p = lemma211_perturb(ext, n);
        CHECK(fixes_base(ext, p.theta2));
        CHECK(agrees_below_top_level(ext, p));
        CHECK(p.perturbed == compose(inverse(p.theta2), compose(p.model, p.theta2)));
        CHECK(p.distance == uniform_distance(ext.extension_auto(), p.perturbed));
        // τ_B and τ′_B differ only on the top tower level, of measure 1/n
        CHECK(p.distance <= q(1, static_cast<long>(n)));
        CHECK(is_r_perturbation(p.theta2, p.perturbed, p.model, 0));
      }
    }
  }
}

TEST_CASE("tower levels partition the extension") {
  const auto ext = partitioned_extension(AlgebraAutomorphism::identity(FiniteAlgebra::uniform(2)), 4);
  const auto levels = tower_levels(ext, 4);
  std::vector<std::size_t> counts(4, 0);
  for (auto k : levels) counts.at(k)++;
  for (auto c : counts) CHECK(c * 4 == ext.algebra().atom_count());
  const auto marker = ext.marker_event(4);
  for (auto atom : marker.atoms()) CHECK(levels[atom] == 0);
}

TEST_CASE("perturbation error paths") {
  const auto ext = partitioned_extension(AlgebraAutomorphism::identity(FiniteAlgebra::uniform(1)), 3);
  CHECK_THROWS_AS(lemma211_perturb(ext, 0), std::invalid_argument);
  CHECK_THROWS_AS(lemma211_perturb(ext, 5), std::out_of_range);
}

TEST_CASE("r-perturbation checks") {
  const auto u4 = FiniteAlgebra::uniform(4);
  const auto id = AlgebraAutomorphism::identity(u4);
  const auto c4 = AlgebraAutomorphism::cyclic_shift(u4);
  CHECK(is_r_perturbation(id, c4, c4, 0));
  CHECK_FALSE(is_r_perturbation(id, id, c4, q(1, 2)));
  CHECK(is_r_perturbation(id, id, c4, 1));
}

TEST_CASE("chaining two perturbations of the same base") {
  cli::Rng rng(9);
  const auto a = FiniteAlgebra::uniform(2);
  const auto ta = perm(a, {1, 0});
  const auto b = partitioned_extension(ta, 4);
  // C: same amalgam, fresh factor relabelled by a random σ
  const auto& fresh = b.fresh();
  const auto sigma = cli::random_automorphism(fresh, rng);
  const auto lift = amalgam_auto(b.amalgam(), AlgebraAutomorphism::identity(a), sigma);
  const auto tc = compose(lift, compose(b.extension_auto(), inverse(lift)));
  std::map<std::size_t, Event> markers;
  for (const auto& [n, m] : b.markers()) markers.emplace(n, apply(sigma, m));
  const PartitionedExtension c(b.amalgam(), ta, tc, markers);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto chained = chain_perturbations(b, c, n);
    CHECK(fixes_base(b, chained.map));
    CHECK(chained.distance <= chained.left_distance + chained.right_distance);
    CHECK(chained.distance <= q(2, static_cast<long>(n)));
  }
}
