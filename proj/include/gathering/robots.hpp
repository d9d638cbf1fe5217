#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gathering {

enum class Side : std::uint8_t { Left, Right };

[[nodiscard]] constexpr Side opposite(Side s) {
  return s == Side::Left ? Side::Right : Side::Left;
}

/// A robot in one of the two piles. Serialized as "L<index>" / "R<index>".
struct RobotId {
  Side side{Side::Left};
  std::size_t index{0};

  [[nodiscard]] std::string to_string() const;
  /// Throws InvalidArgument unless `text` is "L<digits>" or "R<digits>".
  static RobotId parse(std::string_view text);

  friend auto operator<=>(const RobotId&, const RobotId&) = default;
};

/// The robot set: two disjoint copies of {0, ..., n-1}, 2n robots in total.
///
/// Robots are ranked Left pile first: rank(L i) = i, rank(R i) = n + i.
/// Ranks are the dense indices used by Position, DemonicAction and
/// Permutation storage.
class RobotUniverse {
 public:
  RobotUniverse() = default;
  explicit RobotUniverse(std::size_t pile_size) : pile_size_(pile_size) {}

  [[nodiscard]] std::size_t pile_size() const { return pile_size_; }
  [[nodiscard]] std::size_t size() const { return 2 * pile_size_; }
  [[nodiscard]] bool inhabited() const { return pile_size_ > 0; }

  [[nodiscard]] bool contains(const RobotId& id) const {
    return id.index < pile_size_;
  }
  /// Throws InvalidArgument for ids outside the universe.
  [[nodiscard]] std::size_t rank(const RobotId& id) const;
  [[nodiscard]] RobotId id(std::size_t rank) const;
  [[nodiscard]] std::vector<RobotId> ids() const;

  /// Throws EmptyUniverse when the universe has no robots.
  void require_inhabited() const;

  friend bool operator==(const RobotUniverse&, const RobotUniverse&) = default;

 private:
  std::size_t pile_size_{0};
};

}  // namespace gathering
