#include "gathering/position.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "gathering/error.hpp"

namespace gathering {

Position::Position(RobotUniverse universe, const Scalar& fill)
    : universe_(universe), locations_(universe.size(), fill) {}

Position::Position(RobotUniverse universe, std::vector<Scalar> locations)
    : universe_(universe), locations_(std::move(locations)) {
  if (locations_.size() != universe_.size()) {
    throw InvalidArgument("position has " + std::to_string(locations_.size()) +
                          " locations for a universe of " +
                          std::to_string(universe_.size()) + " robots");
  }
}

Position Position::bivalent(RobotUniverse universe, const Scalar& left,
                            const Scalar& right) {
  Position p(universe, left);
  for (std::size_t i = 0; i < universe.pile_size(); ++i) {
    p.set(RobotId{Side::Right, i}, right);
  }
  return p;
}

Spectrum spectrum(const Position& p) {
  Spectrum out;
  for (const Scalar& x : p.locations()) ++out[x];
  return out;
}

Permutation::Permutation(RobotUniverse universe, std::vector<std::size_t> image)
    : universe_(universe), forward_(std::move(image)) {
  const std::size_t m = universe_.size();
  if (forward_.size() != m) {
    throw InvalidArgument("permutation size does not match universe");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  backward_.assign(m, kUnset);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t target = forward_[r];
    if (target >= m || backward_[target] != kUnset) {
      throw InvalidArgument("mapping is not a bijection");
    }
    backward_[target] = r;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (backward_[forward_[r]] != r || forward_[backward_[r]] != r) {
      throw InvalidArgument("inconsistent permutation inverse");
    }
  }
}

Permutation Permutation::identity(RobotUniverse universe) {
  std::vector<std::size_t> image(universe.size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(universe, std::move(image));
}

Permutation Permutation::transposition(RobotUniverse universe, const RobotId& a,
                                       const RobotId& b) {
  std::vector<std::size_t> image(universe.size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::swap(image[universe.rank(a)], image[universe.rank(b)]);
  return Permutation(universe, std::move(image));
}

Permutation Permutation::random(RobotUniverse universe, std::mt19937_64& rng) {
  std::vector<std::size_t> image(universe.size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(universe, std::move(image));
}

RobotId Permutation::apply(const RobotId& id) const {
  return universe_.id(forward_[universe_.rank(id)]);
}

RobotId Permutation::apply_inverse(const RobotId& id) const {
  return universe_.id(backward_[universe_.rank(id)]);
}

Permutation Permutation::inverse() const {
  return Permutation(universe_, backward_);
}

Position permute_position(const Position& p, const Permutation& sigma) {
  if (!(p.universe() == sigma.universe())) {
    throw InvalidArgument("permutation and position use different universes");
  }
  const auto image = sigma.image();
  std::vector<Scalar> out(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) out[image[r]] = p.at_rank(r);
  return Position(p.universe(), std::move(out));
}

}  // namespace gathering
