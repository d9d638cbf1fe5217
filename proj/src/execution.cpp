#include "gathering/execution.hpp"

#include "gathering/error.hpp"
#include "gathering/similarity.hpp"

namespace gathering {

std::vector<DemonicAction> Trace::actions() const {
  std::vector<DemonicAction> out;
  out.reserve(rounds.size());
  for (const TraceRound& r : rounds) out.push_back(r.action);
  return out;
}

Position round(const Robogram& r, const DemonicAction& a, const Position& p,
               const ViewObserver& observer) {
  if (!(a.universe() == p.universe())) {
    throw InvalidArgument("action and position use different universes");
  }
  Position next = p;
  for (std::size_t rank = 0; rank < p.size(); ++rank) {
    const Scalar& factor = a.frame_at_rank(rank);
    if (factor.is_zero()) continue;
    const Similarity frame(factor, p.at_rank(rank));
    const Position view = sim_map_position(frame, p);
    Scalar destination = r.evaluate(view);
    if (observer) observer(p.universe().id(rank), view, destination);
    next.set_rank(rank, frame.inverse().apply(destination));
  }
  return next;
}

Trace execute_prefix(const Robogram& r, Demon& d, const Position& p0,
                     std::size_t horizon, const ViewObserver& observer) {
  p0.universe().require_inhabited();
  Trace trace{r.name(), d.name(), p0, {}};
  trace.rounds.reserve(horizon);
  const Position* current = &trace.initial;
  for (std::size_t i = 0; i < horizon; ++i) {
    try {
      DemonicAction action = d.next(i, *current);
      Position post = round(r, action, *current, observer);
      trace.rounds.push_back(TraceRound{i, std::move(action), std::move(post)});
      current = &trace.rounds.back().post;
    } catch (Error& e) {
      e.set_round(i);
      throw;
    }
  }
  return trace;
}

std::optional<std::size_t> find_replay_mismatch(const Robogram& r,
                                                const Trace& t) {
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const TraceRound& step = t.rounds[i];
    if (step.index != i) return i;
    if (!(step.action.universe() == t.initial.universe()) ||
        !(step.post.universe() == t.initial.universe())) {
      return i;
    }
    if (round(r, step.action, t.position(i)) != step.post) return i;
  }
  return std::nullopt;
}

}  // namespace gathering
