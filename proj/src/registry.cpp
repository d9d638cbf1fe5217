#include "gathering/registry.hpp"

#include <charconv>
#include <cstdint>
#include <string>

#include "gathering/adversary.hpp"
#include "gathering/error.hpp"

namespace gathering {
namespace {

template <typename Int>
Int parse_unsigned(std::string_view text, std::string_view what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("malformed " + std::string(what) + " \"" +
                          std::string(text) + "\"");
  }
  return value;
}

}  // namespace

DemonPtr demon_from_selector(std::string_view selector, const Robogram& r,
                             const Position& initial) {
  const RobotUniverse& universe = initial.universe();
  universe.require_inhabited();

  if (selector == "fsync") {
    return make_fsync([](const Position&, const RobotId&) { return Scalar(1); });
  }
  if (selector == "adversary") {
    return build_adversary_demon(r, universe.pile_size(),
                                 initial[RobotId{Side::Left, 0}],
                                 initial[RobotId{Side::Right, 0}]);
  }
  constexpr std::string_view kRoundRobin = "round-robin:";
  if (selector.starts_with(kRoundRobin)) {
    return make_round_robin(universe, Scalar::parse(selector.substr(kRoundRobin.size())));
  }
  constexpr std::string_view kRandom = "random-kfair:";
  if (selector.starts_with(kRandom)) {
    const std::string_view rest = selector.substr(kRandom.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw InvalidArgument("expected random-kfair:<k>:<seed>");
    }
    const auto k = parse_unsigned<std::size_t>(rest.substr(0, colon), "fairness bound");
    const auto seed = parse_unsigned<std::uint64_t>(rest.substr(colon + 1), "seed");
    return make_random_kfair(universe, k, Scalar(1), seed);
  }
  throw InvalidArgument("unknown demon \"" + std::string(selector) + "\"");
}

}  // namespace gathering
