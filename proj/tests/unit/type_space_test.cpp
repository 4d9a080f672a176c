#include "genericlab/type_space.hpp"

#include "genericlab/oracle/vertex_lp.hpp"
#include "genericlab/rotation_types.hpp"
#include "helpers.hpp"

using namespace genericlab;
using testing::event;
using testing::perm;
using testing::q;

namespace {

TypeTree coin_tree(std::size_t depth) {
  std::vector<std::vector<Rational>> levels;
  for (std::size_t k = 0; k <= depth; ++k) {
    levels.emplace_back(std::size_t{1} << k, Rational(1, 1UL << k));
  }
  return TypeTree(levels);
}

/// Depth-1 tree with values(0) = p.
TypeTree bernoulli(const Rational& p) { return TypeTree({{q(1)}, {p, 1 - p}}); }

}  // namespace

TEST_CASE("SI validation") {
  CHECK(validate_si(coin_tree(4)));
  CHECK_FALSE(validate_si(TypeTree({{q(1)}, {q(3, 5), q(1, 2)}})));
  CHECK_FALSE(validate_si(TypeTree({{q(1)}, {q(3, 2), q(-1, 2)}})));
  // level-2 values that add up but break shift invariance
  CHECK_FALSE(validate_si(TypeTree({{q(1)}, {q(1, 2), q(1, 2)}, {q(1, 2), q(0), q(1, 4), q(1, 4)}})));
  CHECK(coin_tree(3).value("010") == q(1, 8));
  CHECK(coin_tree(3).truncate(1) == coin_tree(1));
}

TEST_CASE("types of fixed and rotated events") {
  const auto u4 = FiniteAlgebra::uniform(4);
  const auto id = AlgebraAutomorphism::identity(u4);
  const auto fixed = type_of(event(u4, {0, 1}), id, 4);
  CHECK(fixed.value("0000") == q(1, 2));
  CHECK(fixed.value("1111") == q(1, 2));
  CHECK(fixed.value("01") == 0);
  CHECK(fixed.value("0010") == 0);
  for (std::size_t n = 1; n < 4; ++n) CHECK(autodist_profile(fixed, n) == 0);

  const auto c4 = AlgebraAutomorphism::cyclic_shift(u4);
  const auto t = type_of(event(u4, {0, 1}), c4, 2);
  CHECK(t.value("00") == q(1, 4));
  CHECK(validate_si(t));
}

TEST_CASE("type_of output is always shift invariant") {
  cli::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t atoms = 1 + cli::draw_below(rng, 10);
    CHECK(validate_si(testing::random_tree(rng, atoms, 4)));
  }
}

TEST_CASE("realizing the fair coin") {
  const auto r = realize(coin_tree(2));
  CHECK(r.algebra.atom_count() == 8);
  CHECK(r.algebra.is_uniform());
  REQUIRE(r.events.size() == 3);
  for (const auto& e : r.events) CHECK(measure(e) == q(1, 2));
  CHECK(measure(intersect(r.events[0], intersect(r.events[1], r.events[2]))) == q(1, 8));
  CHECK(measure(intersect(r.events[0], r.events[2])) == q(1, 4));
}

TEST_CASE("realizing a quarter-turn rotation type matches arc arithmetic") {
  const auto tree = rotation_type(RotationParam::exact(q(1, 4)), 3);
  const auto r = realize(tree);
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::size_t idx = 0; idx < (std::size_t{1} << len); ++idx) {
      std::string bits;
      for (std::size_t i = 0; i < len; ++i) bits += ((idx >> (len - 1 - i)) & 1U) ? '1' : '0';
      Event cell = Event::full(r.algebra);
      for (std::size_t i = 0; i < len; ++i) cell = intersect(cell, bits[i] == '0' ? r.events[i] : complement(r.events[i]));
      CHECK(measure(cell) == measure(rotation_cell(q(1, 4), bits)));
    }
  }
}

TEST_CASE("realize reproduces the tree on every window") {
  cli::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t depth = 1 + cli::draw_below(rng, 4);
    const auto tree = testing::random_tree(rng, 2 + cli::draw_below(rng, 9), depth);
    const auto r = realize(tree);
    REQUIRE(r.events.size() == depth + 1);
    CHECK(window_tree(r.events, 0, depth) == tree);
    CHECK(window_tree(r.events, 1, depth) == tree);
  }
  CHECK(realize(TypeTree({{q(1)}})).algebra.atom_count() == 1);
  CHECK_THROWS_AS(realize(TypeTree({{q(1)}, {q(3, 5), q(1, 2)}})), SiViolation);
}

TEST_CASE("autodist profile of rotation trees") {
  const auto quarter = rotation_type(RotationParam::exact(q(1, 4)), 5);
  CHECK(autodist_profile(quarter, 2) == 1);
  CHECK(autodist_profile(quarter, 4) == 0);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(autodist_profile(quarter, n) == 2 * dist_to_integer(q(n, 4)));
  CHECK_THROWS(autodist_profile(quarter, 5));
}

TEST_CASE("coupling bound examples") {
  const auto p = bernoulli(q(1, 2));
  CHECK(coupling_lower_bound(p, p, 1).bound == 0);
  CHECK(coupling_lower_bound(p, bernoulli(q(1, 4)), 1).bound == q(1, 4));
  cli::Rng rng(29);
  const auto t = testing::random_tree(rng, 7, 3);
  CHECK(coupling_lower_bound(t, t, 3).bound == 0);
}

TEST_CASE("coupling bound error paths") {
  const auto p = coin_tree(2);
  CHECK_THROWS_AS(coupling_lower_bound(p, p, 3), std::invalid_argument);
  CHECK_THROWS_AS(coupling_lower_bound(coin_tree(6), coin_tree(6), 6), std::invalid_argument);
  const TypeTree broken({{q(1)}, {q(3, 5), q(1, 2)}});
  CHECK_THROWS_AS(coupling_lower_bound(broken, bernoulli(q(1, 2)), 1), SiViolation);
}

TEST_CASE("coupling bound is a monotone pseudometric") {
  cli::Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const auto a = testing::random_tree(rng, 6, 3);
    const auto b = testing::random_tree(rng, 6, 3);
    const auto c = testing::random_tree(rng, 6, 3);
    for (std::size_t m = 1; m <= 2; ++m) {
      const Rational ab = coupling_lower_bound(a, b, m).bound;
      CHECK(ab == coupling_lower_bound(b, a, m).bound);
      CHECK(coupling_lower_bound(a, c, m).bound <= ab + coupling_lower_bound(b, c, m).bound);
    }
    CHECK(coupling_lower_bound(a, b, 1).bound <= coupling_lower_bound(a, b, 2).bound);
    CHECK(coupling_lower_bound(a, b, 2).bound <= coupling_lower_bound(a, b, 3).bound);
  }
}

TEST_CASE("coupling bound is sound for common realizations") {
  cli::Rng rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    const auto alg = FiniteAlgebra::uniform(8);
    const auto t = cli::random_automorphism(alg, rng);
    const auto a = cli::random_event(alg, rng);
    const auto b = cli::random_event(alg, rng);
    const auto pa = type_of(a, t, 3);
    const auto pb = type_of(b, t, 3);
    const auto bound = coupling_lower_bound(pa, pb, 3);
    CHECK(bound.bound <= sym_diff_distance(a, b));
    CHECK(validate_pair_si(bound.coupling));
    CHECK(bound.coupling.marginal(0) == pa);
    CHECK(bound.coupling.marginal(1) == pb);
    // the joint type of the pair itself is feasible
    const auto joint = pair_type_of(a, b, t, 3);
    CHECK(validate_pair_si(joint));
    CHECK(joint.root_disagreement() == sym_diff_distance(a, b));
  }
}

TEST_CASE("simplex agrees with vertex enumeration on coupling programs") {
  cli::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::random_tree(rng, 5, 2);
    const auto b = testing::random_tree(rng, 5, 2);
    const auto lp = coupling_program(a, b, 2);
    const auto vertex = oracle::vertex_lp_minimum(lp);
    REQUIRE(vertex.has_value());
    CHECK(*vertex == coupling_lower_bound(a, b, 2).bound);
  }
}

TEST_CASE("exact simplex status handling") {
  // x + y = 1, x - y = 3  has no nonnegative solution
  LinearProgram infeasible{{{q(1), q(1)}, {q(1), q(-1)}}, {q(1), q(3)}, {q(0), q(0)}};
  CHECK(solve_lp(infeasible).status == LpStatus::infeasible);
  // minimize -x subject to x - y = 0
  LinearProgram unbounded{{{q(1), q(-1)}}, {q(0)}, {q(-1), q(0)}};
  CHECK(solve_lp(unbounded).status == LpStatus::unbounded);
  // redundant rows: x + y = 1 twice, minimize x
  LinearProgram redundant{{{q(1), q(1)}, {q(2), q(2)}}, {q(1), q(2)}, {q(1), q(0)}};
  const auto sol = solve_lp(redundant);
  CHECK(sol.status == LpStatus::optimal);
  CHECK(sol.objective == 0);
}

TEST_CASE("lag separation never exceeds the coupling bound") {
  cli::Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = testing::random_tree(rng, 6, 3);
    const auto b = testing::random_tree(rng, 6, 3);
    CHECK(separation_bound(a, b, 2) <= coupling_lower_bound(a, b, 3).bound);
    CHECK(separation_bound(a, a, 2) == 0);
  }
  const auto alpha = rotation_type(RotationParam::exact(q(1, 4)), 3);
  const auto beta = rotation_type(RotationParam::exact(q(1, 2)), 3);
  CHECK(separation_bound(alpha, beta, 2) == q(1, 2));
  CHECK(separation_bound(alpha, beta, 2) <= coupling_lower_bound(alpha, beta, 3).bound);
}

TEST_CASE("types over a finite algebra of fixed events") {
  const auto u8 = FiniteAlgebra::uniform(8);
  // two invariant blocks: {0..3} rotated, {4..7} fixed
  const auto t = perm(u8, {1, 2, 3, 0, 4, 5, 6, 7});
  const std::vector<Event> blocks{event(u8, {0, 1, 2, 3}), event(u8, {4, 5, 6, 7})};
  const std::vector<Event> single{Event::full(u8)};

  const auto b = event(u8, {0, 1, 5});
  const auto trivial = type_over_algebra(b, t, single, 3);
  CHECK(trivial.at(0) == type_of(b, t, 3));

  const auto inside = event(u8, {0, 2});
  const auto split = type_over_algebra(inside, t, blocks, 3);
  CHECK(split.base().atom_count() == 2);
  CHECK(split.at(1).value("111") == 1);
  CHECK(split.average() == type_of(inside, t, 3));
  CHECK(type_over_algebra(b, t, blocks, 3).average() == type_of(b, t, 3));

  const std::vector<Event> not_invariant{event(u8, {0, 1}), event(u8, {2, 3, 4, 5, 6, 7})};
  CHECK_THROWS_AS(type_over_algebra(b, t, not_invariant, 2), std::invalid_argument);
  const std::vector<Event> overlapping{event(u8, {0, 1, 2, 3}), Event::full(u8)};
  CHECK_THROWS_AS(type_over_algebra(b, t, overlapping, 2), std::invalid_argument);
}

TEST_CASE("integral lower bound") {
  const auto u8 = FiniteAlgebra::uniform(8);
  const auto t = perm(u8, {1, 2, 3, 0, 4, 5, 6, 7});
  const std::vector<Event> blocks{event(u8, {0, 1, 2, 3}), event(u8, {4, 5, 6, 7})};
  const auto p = type_over_algebra(event(u8, {0, 1, 4}), t, blocks, 3);
  const TreeBounder lp = [](const TypeTree& x, const TypeTree& y) { return coupling_lower_bound(x, y, 2).bound; };
  CHECK(integral_lower_bound(p, p, lp) == 0);

  // half-measure blocks carrying (α, β) against (β, α)
  const auto alpha = rotation_type(RotationParam::exact(q(1, 4)), 3);
  const auto beta = rotation_type(RotationParam::exact(q(1, 2)), 3);
  const auto halves = FiniteAlgebra::uniform(2);
  const TypeOverAlgebra ab(halves, {alpha, beta});
  const TypeOverAlgebra ba(halves, {beta, alpha});
  const TreeBounder lag = [](const TypeTree& x, const TypeTree& y) { return separation_bound(x, y, 2); };
  CHECK(integral_lower_bound(ab, ba, lag) == q(1, 2));
  CHECK_THROWS_AS(TypeOverAlgebra(halves, {alpha}), std::invalid_argument);
  CHECK_THROWS_AS(TypeOverAlgebra(halves, {bernoulli(q(1, 2)), TypeTree({{q(1)}, {q(3, 5), q(1, 2)}})}), SiViolation);
}
