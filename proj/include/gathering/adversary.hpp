#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gathering/demon.hpp"
#include "gathering/execution.hpp"
#include "gathering/properties.hpp"
#include "gathering/robogram.hpp"
#include "gathering/verdict.hpp"

namespace gathering {

enum class AdversaryBranch { SwapFsync, Alternating };

[[nodiscard]] std::string_view to_string(AdversaryBranch branch);

/// What the robogram does when it sees two equal piles, its own at 0 and the
/// other at 1. Moving exactly onto the other pile (delta = 1) selects the
/// synchronous swap; anything else selects the alternating schedule.
struct FirstMoveProbe {
  Scalar delta;
  AdversaryBranch branch{AdversaryBranch::Alternating};

  friend bool operator==(const FirstMoveProbe&, const FirstMoveProbe&) = default;
};

[[nodiscard]] constexpr AdversaryBranch branch_for(bool moves_onto_other_pile) {
  return moves_onto_other_pile ? AdversaryBranch::SwapFsync
                               : AdversaryBranch::Alternating;
}

/// The bivalent view seen by L0: the left pile at 0, the right pile at 1.
/// Throws EmptyUniverse for n = 0.
[[nodiscard]] Position canonical_view(std::size_t n);

/// Throws EmptyUniverse for n = 0.
[[nodiscard]] FirstMoveProbe probe_first_move(const Robogram& r, std::size_t n);

/// Every robot active every round. A robot at u whose opposite pile is at v
/// gets factor 1/(v − u), which presents it the canonical view.
[[nodiscard]] DemonPtr make_swap_demon(RobotUniverse universe);

/// Even rounds activate exactly the left pile, odd rounds exactly the right
/// pile, with the same 1/(v − u) factors.
[[nodiscard]] DemonPtr make_alternating_demon(RobotUniverse universe);

/// Probes `r` and returns the swap demon or the alternating demon accordingly.
/// The piles start at `a` (left) and `b` (right); throws DegenerateInitial
/// when a == b and EmptyUniverse when n = 0.
[[nodiscard]] DemonPtr build_adversary_demon(const Robogram& r, std::size_t n,
                                             const Scalar& a, const Scalar& b);

/// Per-position check that the robots occupy exactly two locations, n each.
struct BivalenceCertificate {
  std::size_t checked{0};
  std::optional<std::size_t> first_failure;

  [[nodiscard]] bool complete() const { return !first_failure.has_value(); }
};

[[nodiscard]] BivalenceCertificate certify_bivalence(const Trace& t);

struct ImpossibilityReport {
  std::string robogram;
  std::size_t n{0};
  std::size_t horizon{0};
  FirstMoveProbe probe;
  /// Permutation invariance of the robogram on the canonical view.
  bool invariance_ok{true};
  /// Every activated robot saw the canonical view in every round.
  bool views_canonical{true};
  Verdict split;
  GatherVerdict gather;
  Verdict kfair0;
  Verdict kfair1;
  BivalenceCertificate bivalence;

  /// split unviolated, no gathering within the horizon, and 1-fair.
  [[nodiscard]] bool refutes_gathering() const;
  /// Unviolated split must exclude gathering.
  [[nodiscard]] bool consistent() const;
};

struct ImpossibilityRun {
  Trace trace;
  ImpossibilityReport report;
};

inline constexpr std::size_t kInvarianceProbeSamples = 32;

/// Starts from the left pile at 0 and the right pile at 1, runs the adversary
/// demon for `horizon` rounds and checks the trace. `seed` drives the random
/// permutations of the invariance pre-check. Throws EmptyUniverse for n = 0.
[[nodiscard]] ImpossibilityRun run_impossibility(const Robogram& r, std::size_t n,
                                                 std::size_t horizon,
                                                 std::uint64_t seed = 0);

}  // namespace gathering
