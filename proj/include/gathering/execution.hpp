#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gathering/demon.hpp"
#include "gathering/position.hpp"
#include "gathering/robogram.hpp"

namespace gathering {

struct TraceRound {
  std::size_t index{0};
  DemonicAction action;
  Position post;

  friend bool operator==(const TraceRound&, const TraceRound&) = default;
};

/// Finite prefix of an execution. rounds[i].post is the position after round
/// i; the position before round 0 is `initial`.
struct Trace {
  std::string robogram;
  std::string demon;
  Position initial;
  std::vector<TraceRound> rounds;

  [[nodiscard]] std::size_t horizon() const { return rounds.size(); }
  /// Position after `i` rounds: 0 is the initial position, horizon() the last.
  [[nodiscard]] const Position& position(std::size_t i) const {
    return i == 0 ? initial : rounds.at(i - 1).post;
  }
  [[nodiscard]] std::vector<DemonicAction> actions() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Called once per activated robot with the local view it observed and the
/// destination it computed, both in its own frame.
using ViewObserver = std::function<void(const RobotId& robot,
                                        const Position& local_view,
                                        const Scalar& destination)>;

/// One Look-Compute-Move step. Inactive robots keep their location; an active
/// robot x with factor f observes p through ⟦f, p(x)⟧, runs the robogram, and
/// lands on the destination mapped back through the inverse frame. Moves are
/// instantaneous and use no state besides `p` and `a`.
[[nodiscard]] Position round(const Robogram& r, const DemonicAction& a,
                             const Position& p,
                             const ViewObserver& observer = {});

/// Runs `d` against `r` from `p0` for `horizon` rounds. Errors raised by the
/// robogram or the demon are rethrown with the failing round attached.
/// Throws EmptyUniverse when p0's universe has no robots.
[[nodiscard]] Trace execute_prefix(const Robogram& r, Demon& d,
                                   const Position& p0, std::size_t horizon,
                                   const ViewObserver& observer = {});

/// Recomputes every round from its predecessor. Returns the index of the first
/// round whose stored position differs from the recomputed one, if any.
[[nodiscard]] std::optional<std::size_t> find_replay_mismatch(
    const Robogram& r, const Trace& t);

}  // namespace gathering
