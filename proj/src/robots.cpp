#include "gathering/robots.hpp"

#include <charconv>

#include "gathering/error.hpp"

namespace gathering {

std::string RobotId::to_string() const {
  return (side == Side::Left ? "L" : "R") + std::to_string(index);
}

RobotId RobotId::parse(std::string_view text) {
  if (text.size() < 2 || (text.front() != 'L' && text.front() != 'R')) {
    throw InvalidArgument("malformed robot id \"" + std::string(text) + "\"");
  }
  const std::string_view digits = text.substr(1);
  std::size_t index = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() ||
      (digits.size() > 1 && digits.front() == '0')) {
    throw InvalidArgument("malformed robot id \"" + std::string(text) + "\"");
  }
  return RobotId{text.front() == 'L' ? Side::Left : Side::Right, index};
}

std::size_t RobotUniverse::rank(const RobotId& id) const {
  if (!contains(id)) {
    throw InvalidArgument("robot " + id.to_string() +
                          " outside universe of pile size " +
                          std::to_string(pile_size_));
  }
  return id.side == Side::Left ? id.index : pile_size_ + id.index;
}

RobotId RobotUniverse::id(std::size_t rank) const {
  if (rank >= size()) {
    throw InvalidArgument("robot rank " + std::to_string(rank) +
                          " out of range");
  }
  if (rank < pile_size_) return RobotId{Side::Left, rank};
  return RobotId{Side::Right, rank - pile_size_};
}

std::vector<RobotId> RobotUniverse::ids() const {
  std::vector<RobotId> out;
  out.reserve(size());
  for (std::size_t r = 0; r < size(); ++r) out.push_back(id(r));
  return out;
}

void RobotUniverse::require_inhabited() const {
  if (!inhabited()) throw EmptyUniverse("robot universe is empty (n = 0)");
}

}  // namespace gathering
