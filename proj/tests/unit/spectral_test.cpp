#include "genericlab/spectral.hpp"

#include <cmath>

#include "genericlab/oracle/brute_force.hpp"
#include "helpers.hpp"

using namespace genericlab;
using testing::q;

namespace {

SpectralDatum essential_only(ArcSet arcs) { return SpectralDatum(ClosedCircleSet(std::move(arcs)), {}); }

SpectralDatum with_points(ArcSet arcs, std::map<Rational, Multiplicity> eigen) {
  return SpectralDatum(ClosedCircleSet(std::move(arcs)), std::move(eigen));
}

}  // namespace

TEST_CASE("closed circle sets") {
  const ClosedCircleSet s(ArcSet::interval(0, q(1, 2)), {q(1, 2), q(3, 4), 0});
  // endpoints of the arc are already in the closure
  CHECK(s.points() == std::set<Rational>{q(3, 4)});
  CHECK(s.contains(q(1, 2)));
  CHECK(s.contains(q(3, 4)));
  CHECK_FALSE(s.contains(q(5, 8)));
  const auto u = unite(s, ClosedCircleSet(ArcSet::interval(q(1, 2), 1)));
  CHECK(u.arcs().is_full());
  CHECK(u.points().empty());
}

TEST_CASE("genericity") {
  CHECK(is_generic(essential_only(ArcSet::full())));
  CHECK_FALSE(is_generic(essential_only(ArcSet::interval(0, q(1, 2)))));
  CHECK_FALSE(is_generic(SpectralDatum::points_only({{0, 1}, {q(1, 3), 2}, {q(2, 3), 1}})));
  CHECK_FALSE(is_generic(SpectralDatum{}));
}

TEST_CASE("infinite multiplicities fold into the essential part") {
  const auto d = with_points(ArcSet{}, {{q(1, 4), kInfinite}, {q(1, 2), 3}});
  CHECK(d.essential().points() == std::set<Rational>{q(1, 4)});
  CHECK(d.isolated() == std::map<Rational, std::uint64_t>{{q(1, 2), 3}});
  CHECK(d.spectrum().contains(q(1, 2)));
}

TEST_CASE("approximate unitary equivalence examples") {
  const auto d = with_points(ArcSet::interval(0, q(1, 2)), {{q(3, 4), 1}});
  CHECK(aue_decide(d, d));
  const auto full_a = with_points(ArcSet::full(), {{q(1, 8), 1}});
  const auto full_b = with_points(ArcSet::full(), {{q(1, 3), 4}, {q(2, 3), kInfinite}});
  CHECK(aue_decide(full_a, full_b));
  const auto twice = with_points(ArcSet::interval(0, q(1, 2)), {{q(3, 4), 2}});
  CHECK_FALSE(aue_decide(d, twice));
  CHECK_FALSE(aue_decide(d, essential_only(ArcSet::interval(0, q(1, 2)))));
}

TEST_CASE("aue is an equivalence relation on random data") {
  cli::Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = cli::random_datum(rng);
    const auto b = cli::equivalent_variant(a, rng);
    const auto c = cli::equivalent_variant(b, rng);
    const auto other = cli::random_datum(rng);
    CHECK(aue_decide(a, a));
    CHECK(aue_decide(a, b));
    CHECK(aue_decide(b, a));
    CHECK(aue_decide(a, c));
    CHECK(aue_decide(a, other) == aue_decide(other, a));
    if (aue_decide(a, other) && aue_decide(other, c)) CHECK(aue_decide(a, c));
  }
}

TEST_CASE("bottleneck distance examples") {
  const auto square = SpectralDatum::points_only({{0, 1}, {q(1, 4), 1}, {q(1, 2), 1}, {q(3, 4), 1}});
  CHECK(bottleneck_distance(square, square) == 0);
  const auto rotated = SpectralDatum::points_only({{q(1, 8), 1}, {q(3, 8), 1}, {q(5, 8), 1}, {q(7, 8), 1}});
  CHECK(std::abs(bottleneck_distance(square, rotated) - 2 * std::sin(M_PI / 8)) < 1e-12);
  const auto zero = SpectralDatum::points_only({{0, 1}});
  const auto half = SpectralDatum::points_only({{q(1, 2), 1}});
  CHECK(std::abs(bottleneck_distance(zero, half) - 2) < 1e-12);
  // multiplicities are matched point by point
  const auto doubled = SpectralDatum::points_only({{0, 2}});
  const auto spread = SpectralDatum::points_only({{q(1, 10), 1}, {q(9, 10), 1}});
  CHECK(std::abs(bottleneck_distance(doubled, spread) - chord_length(q(1, 10))) < 1e-12);
  CHECK_THROWS_AS(bottleneck_distance(square, zero), std::invalid_argument);
  CHECK_THROWS_AS(bottleneck_distance(essential_only(ArcSet::full()), essential_only(ArcSet::full())),
                  std::invalid_argument);
}

TEST_CASE("bottleneck matching agrees with all bijections") {
  cli::Rng rng(61);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = cli::random_circle_points(k, rng, 24);
      const auto b = cli::random_circle_points(k, rng, 24);
      CHECK(bottleneck_circle_distance(a, b) == oracle::bottleneck_circle_distance(a, b));
    }
  }
}

TEST_CASE("bottleneck distance is a metric") {
  cli::Rng rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + cli::draw_below(rng, 5);
    const auto a = cli::random_circle_points(k, rng, 30);
    const auto b = cli::random_circle_points(k, rng, 30);
    const auto c = cli::random_circle_points(k, rng, 30);
    const Rational ab = bottleneck_circle_distance(a, b);
    CHECK(ab == bottleneck_circle_distance(b, a));
    CHECK(bottleneck_circle_distance(a, c) <= ab + bottleneck_circle_distance(b, c));
    CHECK(bottleneck_circle_distance(a, a) == 0);
  }
}

TEST_CASE("direct sums") {
  const auto d = with_points(ArcSet::interval(0, q(1, 4)), {{q(1, 2), 2}});
  CHECK(direct_sum(d, SpectralDatum{}) == d);
  CHECK(direct_sum(essential_only(ArcSet::interval(0, q(1, 2))), essential_only(ArcSet::interval(q(1, 2), 1)))
            .essential()
            .arcs()
            .is_full());
  const auto p = SpectralDatum::points_only({{q(3, 4), 1}});
  CHECK(direct_sum(p, p).isolated() == std::map<Rational, std::uint64_t>{{q(3, 4), 2}});
  const auto inf = with_points(ArcSet{}, {{q(3, 4), kInfinite}});
  CHECK(direct_sum(p, inf).isolated().empty());
}

TEST_CASE("absorption check") {
  const auto full = essential_only(ArcSet::full());
  CHECK(lemma16_check(full, full));
  CHECK_FALSE(lemma16_check(with_points(ArcSet::full(), {}), SpectralDatum::points_only({{0, 1}})));
  CHECK_FALSE(lemma16_check(with_points(ArcSet::interval(0, q(1, 4)), {{q(1, 2), 1}}),
                            essential_only(ArcSet::full())));
  CHECK_FALSE(lemma16_check(essential_only(ArcSet::interval(0, q(1, 4))), essential_only(ArcSet::interval(q(1, 2), 1))));

  cli::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto big = cli::random_datum(rng);
    const auto arcs = big.essential().arcs();
    if (arcs.is_empty()) continue;
    const auto& arc = arcs.arcs().front();
    const auto small = essential_only(ArcSet::interval(arc.lo, arc.lo + (arc.hi - arc.lo) / 2));
    REQUIRE(lemma16_check(small, big));
    CHECK(aue_decide(direct_sum(small, big), big));
  }
}

TEST_CASE("prime extensions") {
  const auto upper = essential_only(ArcSet::interval(0, q(1, 2)));
  const auto ext = prime_extension(upper);
  REQUIRE(ext.has_value());
  CHECK(ext->essential().arcs() == ArcSet::interval(q(1, 2), 1));
  CHECK(is_generic(direct_sum(upper, *ext)));

  CHECK_FALSE(prime_extension(essential_only(ArcSet::full())).has_value());

  const auto point = SpectralDatum::points_only({{0, 1}});
  const auto around = prime_extension(point);
  REQUIRE(around.has_value());
  CHECK(around->essential().arcs().is_full());

  cli::Rng rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = cli::random_datum(rng);
    const auto e = prime_extension(d);
    CHECK(is_generic(e ? direct_sum(d, *e) : d));
  }
}

TEST_CASE("circle distance and chords") {
  CHECK(circle_distance(q(1, 10), q(9, 10)) == q(1, 5));
  CHECK(circle_distance(0, q(1, 2)) == q(1, 2));
  CHECK(std::abs(chord_length(q(1, 2)) - 2) < 1e-15);
  CHECK(chord_length(0) == 0);
}
