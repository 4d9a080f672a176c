#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "genericlab/cli/sampling.hpp"
#include "genericlab/rational.hpp"
#include "genericlab/type_space.hpp"

namespace doctest {
// Rationals and gmpxx expression templates print as "num/den".
template <class U>
struct StringMaker<__gmp_expr<mpq_t, U>> {
  static String convert(const __gmp_expr<mpq_t, U>& q) {
    return genericlab::to_fraction_string(genericlab::Rational(q)).c_str();
  }
};
}  // namespace doctest

namespace testing {

using genericlab::Rational;

inline Rational q(long num, long den = 1) { return genericlab::make_rational(num, den); }

inline genericlab::Event event(const genericlab::FiniteAlgebra& alg, std::vector<std::size_t> atoms) {
  return genericlab::Event(alg, std::move(atoms));
}

inline genericlab::AlgebraAutomorphism perm(const genericlab::FiniteAlgebra& alg, std::vector<std::size_t> p) {
  return genericlab::AlgebraAutomorphism(alg, std::move(p));
}

/// Random shift-invariant tree: the type of a random event under a random
/// permutation of a uniform algebra.
inline genericlab::TypeTree random_tree(genericlab::cli::Rng& rng, std::size_t atoms, std::size_t depth) {
  const auto alg = genericlab::FiniteAlgebra::uniform(atoms);
  return genericlab::type_of(genericlab::cli::random_event(alg, rng), genericlab::cli::random_automorphism(alg, rng),
                             depth);
}

}  // namespace testing
