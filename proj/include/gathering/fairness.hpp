#pragma once

#include <cstddef>
#include <span>

#include "gathering/demon.hpp"
#include "gathering/verdict.hpp"

namespace gathering {

/// Bounded check of "g is activated within the next k activations of h".
///
/// Walks the actions and applies, in priority order: g active closes the
/// derivation (Proven at that round); g inactive and h active consumes one
/// unit of budget, or is Violated at that round when none is left; both
/// inactive stalls. Running off the end of the prefix gives Unknown.
/// Throws InvalidArgument when `actions` is empty.
[[nodiscard]] Verdict check_between(std::span<const DemonicAction> actions,
                                    const RobotId& g, const RobotId& h,
                                    std::size_t k);

/// Bounded k-fairness: Between must hold for every ordered pair from every
/// round on. Reports Violated(i) for the earliest start round i from which
/// some pair is violated; otherwise NoViolationUpTo(horizon). Never Proven.
/// Throws InvalidArgument when `actions` is empty.
[[nodiscard]] Verdict check_kfair(std::span<const DemonicAction> actions,
                                  std::size_t k);

}  // namespace gathering
