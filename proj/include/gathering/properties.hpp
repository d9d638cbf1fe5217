#pragma once

#include <cstddef>
#include <optional>

#include "gathering/execution.hpp"
#include "gathering/position.hpp"
#include "gathering/scalar.hpp"
#include "gathering/verdict.hpp"

namespace gathering {

/// Bounded gathering outcome. Gathering is an "eventually forever" property,
/// so a finite prefix can at best show the robots stacked from some round to
/// the end of the prefix.
struct GatherVerdict {
  enum class Kind { TentativelyGathered, NotWithinHorizon };

  Kind kind{Kind::NotWithinHorizon};
  /// First position index of the stacked suffix; only for TentativelyGathered.
  std::size_t round{0};
  std::optional<Scalar> point;
  std::size_t horizon{0};

  [[nodiscard]] bool gathered() const { return kind == Kind::TentativelyGathered; }

  friend bool operator==(const GatherVerdict&, const GatherVerdict&) = default;
};

[[nodiscard]] std::string_view to_string(GatherVerdict::Kind kind);

/// The common location of all robots, if they are all stacked on one point.
/// Throws EmptyUniverse for a universe without robots.
[[nodiscard]] std::optional<Scalar> gathered_location(const Position& p);

/// Least position index i such that positions i..horizon are all stacked on
/// one common point. Position index 0 is the initial position.
[[nodiscard]] GatherVerdict check_will_gather(const Trace& t);

/// No left robot shares a location with a right robot. Robots of the same
/// side may coincide.
[[nodiscard]] bool split(const Position& p);

/// Violated(i) for the first position index i (0 = initial position) that is
/// not split; NoViolationUpTo(horizon) otherwise.
[[nodiscard]] Verdict check_always_split(const Trace& t);

}  // namespace gathering
