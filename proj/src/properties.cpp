#include "gathering/properties.hpp"

#include <set>

#include "gathering/error.hpp"

namespace gathering {

std::string_view to_string(GatherVerdict::Kind kind) {
  return kind == GatherVerdict::Kind::TentativelyGathered ? "TentativelyGathered"
                                                          : "NotWithinHorizon";
}

std::optional<Scalar> gathered_location(const Position& p) {
  p.universe().require_inhabited();
  const auto locations = p.locations();
  for (const Scalar& x : locations) {
    if (x != locations.front()) return std::nullopt;
  }
  return locations.front();
}

GatherVerdict check_will_gather(const Trace& t) {
  const std::size_t horizon = t.horizon();
  std::optional<Scalar> point = gathered_location(t.position(horizon));
  if (!point) return GatherVerdict{GatherVerdict::Kind::NotWithinHorizon, 0, {}, horizon};

  std::size_t first = horizon;
  while (first > 0 && gathered_location(t.position(first - 1)) == point) --first;
  return GatherVerdict{GatherVerdict::Kind::TentativelyGathered, first, point, horizon};
}

bool split(const Position& p) {
  const std::size_t n = p.universe().pile_size();
  std::set<Scalar> left;
  for (std::size_t i = 0; i < n; ++i) left.insert(p[RobotId{Side::Left, i}]);
  for (std::size_t i = 0; i < n; ++i) {
    if (left.contains(p[RobotId{Side::Right, i}])) return false;
  }
  return true;
}

Verdict check_always_split(const Trace& t) {
  const std::size_t horizon = t.horizon();
  for (std::size_t i = 0; i <= horizon; ++i) {
    if (!split(t.position(i))) return Verdict::violated(i, horizon);
  }
  return Verdict::no_violation_up_to(horizon);
}

}  // namespace gathering
