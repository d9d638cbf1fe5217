#pragma once

#include <string_view>

#include "gathering/demon.hpp"
#include "gathering/position.hpp"
#include "gathering/robogram.hpp"

namespace gathering {

/// Resolves a CLI demon selector against a run's robogram and initial position:
///   "fsync"                    every robot, factor 1
///   "round-robin:<num/den>"    one robot per round with the given factor
///   "random-kfair:<k>:<seed>"  random k-fair schedule, factor 1
///   "adversary"                swap or alternating demon chosen by probing r;
///                              piles read off L0 and R0 of `initial`
/// Throws InvalidArgument for unknown or malformed selectors.
[[nodiscard]] DemonPtr demon_from_selector(std::string_view selector,
                                           const Robogram& r,
                                           const Position& initial);

}  // namespace gathering
