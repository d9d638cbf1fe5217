#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gathering/position.hpp"
#include "gathering/scalar.hpp"

namespace gathering {

enum class RobogramKind { SpectrumBased, Raw };

/// Deterministic destination function run by every activated robot.
///
/// The input is the whole position as seen in the robot's own frame (the robot
/// itself sits at 0); the output is a destination in that same frame.
/// Spectrum-based robograms only ever see the multiset of locations, so they
/// are invariant under robot permutation by construction. Raw robograms see
/// robot identities and exist to exercise the invariance checker.
///
/// Algorithms signal a destination outside the rationals by throwing
/// NonRepresentableDestination.
class Robogram {
 public:
  using SpectrumAlgo = std::function<Scalar(const Spectrum&)>;
  using RawAlgo = std::function<Scalar(const Position&)>;

  static Robogram spectrum_based(std::string name, SpectrumAlgo algo);
  static Robogram raw(std::string name, RawAlgo algo);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] RobogramKind kind() const { return kind_; }

  [[nodiscard]] Scalar evaluate(const Position& local_view) const;

 private:
  Robogram(std::string name, RobogramKind kind, RawAlgo algo)
      : name_(std::move(name)), kind_(kind), algo_(std::move(algo)) {}

  std::string name_;
  RobogramKind kind_;
  RawAlgo algo_;
};

[[nodiscard]] inline Scalar evaluate(const Robogram& r, const Position& p) {
  return r.evaluate(p);
}

/// evaluate(r, p) == evaluate(r, permute_position(p, sigma)).
[[nodiscard]] bool check_invariance(const Robogram& r, const Position& p,
                                    const Permutation& sigma);

namespace robograms {

/// Always 0: the robot stays where it is.
Robogram stay();
/// Mean of all locations, counted with multiplicity.
Robogram center_of_mass();
/// With exactly two occupied locations, one of them the observer's (0), go to
/// the other one. Any other view: stay.
Robogram to_other_occupied();
Robogram to_max();
Robogram to_min();
/// lambda · center_of_mass.
Robogram convex(const Scalar& lambda);
/// Returns the location of robot L0. Breaks permutation invariance.
Robogram broken_id_leak();

}  // namespace robograms

/// Resolves a CLI selector: "stay", "center-of-mass", "to-other-occupied",
/// "to-max", "to-min", "convex:<num/den>", "broken-id-leak". The robogram's
/// name is the selector itself, so trace headers resolve back to it.
/// Throws InvalidArgument for unknown selectors.
[[nodiscard]] Robogram robogram_from_selector(std::string_view selector);

/// Selectors of every spectrum-based built-in, with a sample convex parameter.
[[nodiscard]] std::vector<std::string> builtin_selectors();

}  // namespace gathering
