#include "gathering/fairness.hpp"

#include <algorithm>
#include <optional>

#include "gathering/error.hpp"

namespace gathering {

std::string_view to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Proven:
      return "Proven";
    case Verdict::Kind::Violated:
      return "Violated";
    case Verdict::Kind::NoViolationUpTo:
      return "NoViolationUpTo";
    case Verdict::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Verdict check_between(std::span<const DemonicAction> actions, const RobotId& g,
                      const RobotId& h, std::size_t k) {
  if (actions.empty()) throw InvalidArgument("check_between on an empty prefix");
  const std::size_t horizon = actions.size();
  std::size_t budget = k;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (actions[i].active(g)) return Verdict::proven(i, horizon);
    if (actions[i].active(h)) {
      if (budget == 0) return Verdict::violated(i, horizon);
      --budget;
    }
  }
  return Verdict::unknown(horizon);
}

// A start round s fails for (g, h) exactly when g stays inactive from s until
// h has been activated k + 1 times. Within one maximal g-inactive run the
// run's first round sees the most h activations, so the earliest failing
// start for the pair is the start of the first run holding more than k of
// them. That gives one linear pass per pair instead of one per start round.
Verdict check_kfair(std::span<const DemonicAction> actions, std::size_t k) {
  if (actions.empty()) throw InvalidArgument("check_kfair on an empty prefix");
  const std::size_t horizon = actions.size();
  const std::size_t m = actions.front().universe().size();

  std::optional<std::size_t> earliest;
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      if (g == h) continue;
      std::size_t run_start = 0;
      std::size_t seen = 0;
      for (std::size_t i = 0; i < horizon; ++i) {
        if (earliest && run_start >= *earliest) break;
        if (actions[i].active_at_rank(g)) {
          run_start = i + 1;
          seen = 0;
        } else if (actions[i].active_at_rank(h) && ++seen > k) {
          earliest = std::min(earliest.value_or(run_start), run_start);
          break;
        }
      }
    }
  }
  if (earliest) return Verdict::violated(*earliest, horizon);
  return Verdict::no_violation_up_to(horizon);
}

}  // namespace gathering
