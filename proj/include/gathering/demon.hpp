#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gathering/position.hpp"
#include "gathering/scalar.hpp"

namespace gathering {

/// One round of scheduling: a frame factor per robot, 0 meaning inactive.
class DemonicAction {
 public:
  DemonicAction() = default;
  /// Every robot gets `fill`.
  explicit DemonicAction(RobotUniverse universe, const Scalar& fill = Scalar{});
  /// Factors in rank order; throws InvalidArgument on size mismatch.
  DemonicAction(RobotUniverse universe, std::vector<Scalar> frames);

  [[nodiscard]] const RobotUniverse& universe() const { return universe_; }
  [[nodiscard]] const Scalar& frame(const RobotId& id) const {
    return frames_[universe_.rank(id)];
  }
  [[nodiscard]] const Scalar& frame_at_rank(std::size_t rank) const {
    return frames_.at(rank);
  }
  [[nodiscard]] bool active(const RobotId& id) const { return !frame(id).is_zero(); }
  [[nodiscard]] bool active_at_rank(std::size_t rank) const {
    return !frames_.at(rank).is_zero();
  }
  void set(const RobotId& id, Scalar factor) {
    frames_[universe_.rank(id)] = std::move(factor);
  }
  void set_rank(std::size_t rank, Scalar factor) {
    frames_.at(rank) = std::move(factor);
  }

  [[nodiscard]] std::span<const Scalar> frames() const { return frames_; }

  friend bool operator==(const DemonicAction&, const DemonicAction&) = default;

 private:
  RobotUniverse universe_;
  std::vector<Scalar> frames_;
};

/// Lazily produced infinite stream of demonic actions.
///
/// A demon may look at the current position when choosing the next action.
/// Since executions are deterministic, any such demon still induces a single
/// fixed stream for a given robogram and initial position.
class Demon {
 public:
  virtual ~Demon() = default;

  /// Action for round `round`. Rounds are requested in order 0, 1, 2, ...
  virtual DemonicAction next(std::size_t round, const Position& current) = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

using DemonPtr = std::unique_ptr<Demon>;

using FactorPolicy = std::function<Scalar(const Position&, const RobotId&)>;

/// Activates every robot every round with the factor chosen by `policy`.
/// next() throws ZeroFactorFromPolicy if the policy returns 0.
DemonPtr make_fsync(FactorPolicy policy, std::string name = "fsync");

/// Round i activates only the robot of rank i mod 2n, with `factor`.
/// Throws InvalidArgument when `factor` is zero.
DemonPtr make_round_robin(RobotUniverse universe, const Scalar& factor);

/// Random semi-synchronous demon in which no robot is activated more than `k`
/// times between two activations of any other robot. Deterministic in `seed`.
DemonPtr make_random_kfair(RobotUniverse universe, std::size_t k,
                           const Scalar& factor, std::uint64_t seed);

/// Replays `actions` and then repeats them cyclically. Position independent.
/// Throws InvalidArgument when `actions` is empty.
DemonPtr make_cyclic(std::vector<DemonicAction> actions, std::string name);

/// Adapter: wraps `inner`, multiplying every frame factor by `scale`.
DemonPtr make_rescaled(DemonPtr inner, const Scalar& scale);

}  // namespace gathering
