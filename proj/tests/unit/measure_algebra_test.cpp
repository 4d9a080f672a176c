#include "genericlab/measure_algebra.hpp"

#include "genericlab/oracle/brute_force.hpp"
#include "helpers.hpp"

using namespace genericlab;
using testing::event;
using testing::perm;
using testing::q;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-0.125") == q(-1, 8));
  CHECK(parse_rational("7") == q(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_fraction_string(q(3)) == "3/1");
  CHECK(to_decimal_string(q(2, 3)) == "0.666667");
  CHECK(frac(q(-1, 4)) == q(3, 4));
  CHECK(dist_to_integer(q(7, 10)) == q(3, 10));
}

TEST_CASE("algebra construction rejects bad measures") {
  CHECK_THROWS(FiniteAlgebra({q(1, 2), q(1, 3)}));
  CHECK_THROWS(FiniteAlgebra({q(3, 2), q(-1, 2)}));
  CHECK_THROWS(FiniteAlgebra(std::vector<Rational>{}));
  CHECK(FiniteAlgebra::uniform(5).is_uniform());
  CHECK_FALSE(FiniteAlgebra({q(1, 2), q(1, 3), q(1, 6)}).is_uniform());
}

TEST_CASE("event measure") {
  const auto u4 = FiniteAlgebra::uniform(4);
  CHECK(measure(event(u4, {0, 1})) == q(1, 2));
  CHECK(measure(Event::empty(u4)) == 0);
  const FiniteAlgebra mixed({q(1, 2), q(1, 3), q(1, 6)});
  CHECK(measure(event(mixed, {1, 2})) == q(1, 2));
  CHECK(measure(Event::empty(mixed)) == 0);
  CHECK_THROWS(event(u4, {4}));
}

TEST_CASE("symmetric difference distance") {
  const auto u4 = FiniteAlgebra::uniform(4);
  const auto a = event(u4, {0, 1});
  CHECK(sym_diff_distance(a, a) == 0);
  CHECK(sym_diff_distance(a, event(u4, {2, 3})) == 1);
  const auto u6 = FiniteAlgebra::uniform(6);
  CHECK(sym_diff_distance(event(u6, {0, 1, 2}), event(u6, {2, 3})) == q(1, 2));
}

TEST_CASE("separately built algebras do not mix") {
  const auto a = FiniteAlgebra::uniform(4);
  const auto b = FiniteAlgebra::uniform(4);
  CHECK_THROWS_AS(sym_diff_distance(Event::full(a), Event::full(b)), AlgebraMismatch);
  CHECK_THROWS_AS(apply(AlgebraAutomorphism::identity(a), Event::full(b)), AlgebraMismatch);
  CHECK_THROWS_AS(uniform_distance(AlgebraAutomorphism::identity(a), AlgebraAutomorphism::identity(b)),
                  AlgebraMismatch);
}

TEST_CASE("automorphisms must preserve measure and be bijective") {
  const FiniteAlgebra mixed({q(1, 2), q(1, 4), q(1, 4)});
  CHECK_NOTHROW(perm(mixed, {0, 2, 1}));
  CHECK_THROWS(perm(mixed, {1, 0, 2}));
  CHECK_THROWS(perm(mixed, {0, 1, 1}));
  CHECK_THROWS(perm(mixed, {0, 1}));
}

TEST_CASE("apply, compose, inverse, power") {
  const auto u4 = FiniteAlgebra::uniform(4);
  const auto shift = AlgebraAutomorphism::cyclic_shift(u4);
  const auto e = event(u4, {0, 2});
  CHECK(apply(AlgebraAutomorphism::identity(u4), e) == e);
  CHECK(apply(shift, event(u4, {0})) == event(u4, {1}));
  CHECK(power(shift, 0).is_identity());
  CHECK(power(shift, 4).is_identity());
  CHECK(power(shift, -1) == inverse(shift));
  CHECK(compose(shift, inverse(shift)).is_identity());
  CHECK(apply(power(shift, 3), event(u4, {1})) == event(u4, {0}));
  const auto swap = perm(u4, {1, 0, 2, 3});
  // compose(outer, inner) applies inner first
  CHECK(apply(compose(swap, shift), event(u4, {0})) == event(u4, {0}));
  CHECK(apply(compose(shift, swap), event(u4, {0})) == event(u4, {2}));
}

TEST_CASE("cycle decomposition") {
  const auto u6 = FiniteAlgebra::uniform(6);
  const auto t = perm(u6, {1, 2, 0, 3, 5, 4});
  const auto cs = cycles(t);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(cs[1] == std::vector<std::size_t>{3});
  CHECK(cs[2] == std::vector<std::size_t>{4, 5});
}

TEST_CASE("uniform distance examples") {
  const auto u4 = FiniteAlgebra::uniform(4);
  const auto id4 = AlgebraAutomorphism::identity(u4);
  const auto c4 = AlgebraAutomorphism::cyclic_shift(u4);
  CHECK(uniform_distance(c4, c4) == 0);
  CHECK(uniform_distance(id4, c4) == 1);
  CHECK(oracle::uniform_distance(id4, c4) == 1);
  const auto u3 = FiniteAlgebra::uniform(3);
  const auto c3 = AlgebraAutomorphism::cyclic_shift(u3);
  CHECK(uniform_distance(AlgebraAutomorphism::identity(u3), c3) == q(2, 3));
  CHECK(oracle::uniform_distance(AlgebraAutomorphism::identity(u3), c3) == q(2, 3));
}

TEST_CASE("uniform distance on non-uniform algebras matches enumeration") {
  cli::Rng rng(11);
  const FiniteAlgebra mixed({q(1, 4), q(1, 8), q(1, 8), q(1, 8), q(1, 8), q(1, 12), q(1, 12), q(1, 12)});
  for (int trial = 0; trial < 40; ++trial) {
    const auto t0 = cli::random_automorphism(mixed, rng);
    const auto t1 = cli::random_automorphism(mixed, rng);
    CHECK(uniform_distance(t0, t1) == oracle::uniform_distance(t0, t1));
  }
}

TEST_CASE("uniform distance is a bi-invariant metric") {
  cli::Rng rng(5);
  for (std::size_t n : {3U, 5U, 8U, 10U}) {
    const auto alg = FiniteAlgebra::uniform(n);
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = cli::random_automorphism(alg, rng);
      const auto b = cli::random_automorphism(alg, rng);
      const auto c = cli::random_automorphism(alg, rng);
      const auto s = cli::random_automorphism(alg, rng);
      const Rational dab = uniform_distance(a, b);
      CHECK(dab == uniform_distance(b, a));
      CHECK(uniform_distance(a, c) <= dab + uniform_distance(b, c));
      CHECK((dab == 0) == (a == b));
      CHECK(uniform_distance(compose(s, a), compose(s, b)) == dab);
      CHECK(uniform_distance(compose(a, s), compose(b, s)) == dab);
    }
  }
}

TEST_CASE("free amalgam") {
  const auto a2 = FiniteAlgebra::uniform(2);
  const auto a3 = FiniteAlgebra::uniform(3);
  const auto am = free_amalgam(a2, a3);
  CHECK(am.algebra().atom_count() == 6);
  CHECK(am.algebra().is_uniform());
  for (std::size_t i = 0; i < 6; ++i) CHECK(am.algebra().atom_measure(i) == q(1, 6));
  CHECK(amalgam_auto(am, AlgebraAutomorphism::identity(a2), AlgebraAutomorphism::identity(a3)).is_identity());
  const auto left = am.embed_left(event(a2, {0}));
  CHECK(left == event(am.algebra(), {am.atom(0, 0), am.atom(0, 1), am.atom(0, 2)}));
  CHECK(measure(left) == q(1, 2));
}

TEST_CASE("amalgam factors are independent and the product automorphism restricts") {
  const FiniteAlgebra left({q(1, 2), q(1, 3), q(1, 6)});
  const auto right = FiniteAlgebra::uniform(3);
  const auto am = free_amalgam(left, right);
  for (unsigned ma = 0; ma < 8; ++ma) {
    std::vector<bool> mask_a = {(ma & 1U) != 0, (ma & 2U) != 0, (ma & 4U) != 0};
    const auto ea = event_from_mask(left, mask_a);
    for (unsigned mb = 0; mb < 8; ++mb) {
      std::vector<bool> mask_b = {(mb & 1U) != 0, (mb & 2U) != 0, (mb & 4U) != 0};
      const auto eb = event_from_mask(right, mask_b);
      CHECK(measure(intersect(am.embed_left(ea), am.embed_right(eb))) == measure(ea) * measure(eb));
    }
  }
  const auto ta = AlgebraAutomorphism::identity(left);
  const auto tb = AlgebraAutomorphism::cyclic_shift(right);
  const auto t = amalgam_auto(am, ta, tb);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(apply(t, am.embed_left(event(left, {i}))) == am.embed_left(apply(ta, event(left, {i}))));
  }
}

TEST_CASE("Rokhlin tower examples") {
  const auto u7 = FiniteAlgebra::uniform(7);
  const auto tower = rokhlin_tower(AlgebraAutomorphism::cyclic_shift(u7), 3);
  CHECK(measure(tower.base) == q(2, 7));
  CHECK(tower.covered == q(6, 7));

  const auto id = AlgebraAutomorphism::identity(u7);
  const auto none = rokhlin_tower(id, 2);
  CHECK(none.base.is_empty());
  CHECK(none.covered == 0);

  const auto u6 = FiniteAlgebra::uniform(6);
  const auto two_cycles = perm(u6, {1, 2, 0, 4, 5, 3});
  const auto t3 = rokhlin_tower(two_cycles, 3);
  CHECK(measure(t3.base) == q(2, 6));
  CHECK(t3.covered == 1);
  CHECK(oracle::rokhlin_base_measure(two_cycles, 3) == q(2, 6));
}

TEST_CASE("Rokhlin towers are maximal partitions") {
  cli::Rng rng(3);
  for (std::size_t n_atoms = 1; n_atoms <= 9; ++n_atoms) {
    const auto alg = FiniteAlgebra::uniform(n_atoms);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = cli::random_automorphism(alg, rng);
      for (std::size_t n : {2U, 3U, 4U}) {
        const auto tower = rokhlin_tower(t, n);
        CHECK(is_n_eps_partition(tower.base, t, n, 1 - tower.covered));
        CHECK(measure(tower.base) == oracle::rokhlin_base_measure(t, n));
      }
    }
  }
}

TEST_CASE("n-eps partitions") {
  const auto u6 = FiniteAlgebra::uniform(6);
  const auto t = perm(u6, {1, 2, 0, 4, 5, 3});
  CHECK(is_n_eps_partition(event(u6, {0, 3}), t, 3, 0));
  CHECK_FALSE(is_n_eps_partition(event(u6, {0, 1}), t, 3, 0));
  CHECK_FALSE(is_n_eps_partition(event(u6, {0, 1}), t, 3, 1));
  for (const Rational& eps : {q(0), q(1, 10), q(1)}) CHECK(is_n_eps_partition(event(u6, {0, 3}), t, 3, eps));
  CHECK_FALSE(is_n_eps_partition(event(u6, {0}), t, 3, q(1, 3)));
  CHECK(is_n_eps_partition(event(u6, {0}), t, 3, q(1, 2)));
}

TEST_CASE("support measure") {
  const auto u6 = FiniteAlgebra::uniform(6);
  CHECK(support_measure(AlgebraAutomorphism::identity(u6), 3) == 0);
  const auto shift = AlgebraAutomorphism::cyclic_shift(u6);
  CHECK(support_measure(shift, 5) == 1);
  CHECK(support_measure(shift, 1) == 1);
  CHECK(support_measure(shift, 6) == 0);
}

TEST_CASE("brute-force oracles refuse oversized instances") {
  const auto big = FiniteAlgebra::uniform(21);
  const auto id = AlgebraAutomorphism::identity(big);
  CHECK_THROWS_AS(oracle::uniform_distance(id, id), oracle::CapExceeded);
  CHECK_THROWS_AS(oracle::rokhlin_base_measure(id, 2), oracle::CapExceeded);
  const auto small = FiniteAlgebra::uniform(6);
  CHECK_THROWS_AS(oracle::uniform_distance(AlgebraAutomorphism::identity(small),
                                           AlgebraAutomorphism::identity(small), 5),
                  oracle::CapExceeded);
}
