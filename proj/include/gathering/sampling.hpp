#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "gathering/position.hpp"
#include "gathering/robogram.hpp"

namespace gathering {

/// Small random rational: numerator in [-8, 8], denominator in [1, 4].
[[nodiscard]] Scalar random_scalar(std::mt19937_64& rng);

/// Random position over `universe`. Locations are drawn from a pool of at most
/// `universe.size()` values, so stacked robots show up regularly.
[[nodiscard]] Position random_position(const RobotUniverse& universe,
                                       std::mt19937_64& rng);

struct InvarianceCounterexample {
  Position position;
  Permutation permutation;
  Scalar original;
  Scalar permuted;
};

struct InvarianceSampleResult {
  std::size_t samples_run{0};
  std::optional<InvarianceCounterexample> counterexample;

  [[nodiscard]] bool passed() const { return !counterexample.has_value(); }
};

/// Runs check_invariance on `samples` random (position, permutation) pairs
/// with pile sizes 1..4 and stops at the first failure.
[[nodiscard]] InvarianceSampleResult sample_invariance(const Robogram& r,
                                                       std::size_t samples,
                                                       std::uint64_t seed);

}  // namespace gathering
