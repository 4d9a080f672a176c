#pragma once

#include <cstddef>
#include <vector>

#include "genericlab/measure_algebra.hpp"
#include "genericlab/rational.hpp"

namespace genericlab::oracle {

/// Thrown when an instance is larger than the enumeration cap.
class CapExceeded : public std::invalid_argument {
 public:
  explicit CapExceeded(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr std::size_t kEventEnumerationCap = 20;
inline constexpr std::size_t kMatchingCap = 8;

/// max over all 2^N events x of μ(t0 x Δ t1 x).
Rational uniform_distance(const AlgebraAutomorphism& t0, const AlgebraAutomorphism& t1,
                          std::size_t cap = kEventEnumerationCap);

/// max μ(a) over events a with a, ta, …, t^{n−1}a pairwise disjoint.
Rational rokhlin_base_measure(const AlgebraAutomorphism& t, std::size_t n, std::size_t cap = kEventEnumerationCap);

/// min over all bijections of the largest circular distance between matched points.
Rational bottleneck_circle_distance(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                    std::size_t cap = kMatchingCap);

}  // namespace genericlab::oracle
