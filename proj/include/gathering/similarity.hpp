#pragma once

#include "gathering/position.hpp"
#include "gathering/scalar.hpp"

namespace gathering {

/// Frame change x ↦ factor · (x − center). The factor is never zero.
class Similarity {
 public:
  /// Throws InvalidArgument when `factor` is zero.
  Similarity(Scalar factor, Scalar center);

  [[nodiscard]] const Scalar& factor() const { return factor_; }
  [[nodiscard]] const Scalar& center() const { return center_; }

  [[nodiscard]] Scalar apply(const Scalar& x) const;
  /// x ↦ x / factor + center, written as a similarity: ⟦1/factor, −factor·center⟧.
  [[nodiscard]] Similarity inverse() const;

  friend bool operator==(const Similarity&, const Similarity&) = default;

 private:
  Scalar factor_;
  Scalar center_;
};

[[nodiscard]] inline Scalar sim_apply(const Similarity& s, const Scalar& x) {
  return s.apply(x);
}
[[nodiscard]] inline Similarity sim_inverse(const Similarity& s) {
  return s.inverse();
}
[[nodiscard]] Position sim_map_position(const Similarity& s, const Position& p);

}  // namespace gathering
