#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "gathering/robots.hpp"
#include "gathering/scalar.hpp"

namespace gathering {

/// Locations with multiplicities, ordered by location.
using Spectrum = std::map<Scalar, std::size_t>;

/// Total map from the robots of a universe to their locations.
class Position {
 public:
  Position() = default;
  /// Every robot at `fill`.
  explicit Position(RobotUniverse universe, const Scalar& fill = Scalar{});
  /// Locations given in rank order; throws InvalidArgument on size mismatch.
  Position(RobotUniverse universe, std::vector<Scalar> locations);

  /// Left pile at `left`, right pile at `right`.
  static Position bivalent(RobotUniverse universe, const Scalar& left,
                           const Scalar& right);

  [[nodiscard]] const RobotUniverse& universe() const { return universe_; }
  [[nodiscard]] std::size_t size() const { return locations_.size(); }

  [[nodiscard]] const Scalar& operator[](const RobotId& id) const {
    return locations_[universe_.rank(id)];
  }
  [[nodiscard]] const Scalar& at_rank(std::size_t rank) const {
    return locations_.at(rank);
  }
  void set(const RobotId& id, Scalar location) {
    locations_[universe_.rank(id)] = std::move(location);
  }
  void set_rank(std::size_t rank, Scalar location) {
    locations_.at(rank) = std::move(location);
  }

  [[nodiscard]] std::span<const Scalar> locations() const { return locations_; }

  friend bool operator==(const Position&, const Position&) = default;

 private:
  RobotUniverse universe_;
  std::vector<Scalar> locations_;
};

[[nodiscard]] Spectrum spectrum(const Position& p);

/// Bijection on the robots of a universe, stored with its inverse.
class Permutation {
 public:
  /// `image[rank]` is the rank of the image of robot `rank`. Verifies the
  /// mapping is a bijection and throws InvalidArgument otherwise.
  Permutation(RobotUniverse universe, std::vector<std::size_t> image);

  static Permutation identity(RobotUniverse universe);
  static Permutation transposition(RobotUniverse universe, const RobotId& a,
                                   const RobotId& b);
  static Permutation random(RobotUniverse universe, std::mt19937_64& rng);

  [[nodiscard]] const RobotUniverse& universe() const { return universe_; }
  [[nodiscard]] RobotId apply(const RobotId& id) const;
  [[nodiscard]] RobotId apply_inverse(const RobotId& id) const;
  [[nodiscard]] Permutation inverse() const;

  [[nodiscard]] std::span<const std::size_t> image() const { return forward_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  RobotUniverse universe_;
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> backward_;
};

/// p ∘ σ⁻¹: the robot σ(r) ends up where r was.
[[nodiscard]] Position permute_position(const Position& p,
                                        const Permutation& sigma);

}  // namespace gathering
