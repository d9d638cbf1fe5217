#include "gathering/similarity.hpp"

#include <utility>

#include "gathering/error.hpp"

namespace gathering {

Similarity::Similarity(Scalar factor, Scalar center)
    : factor_(std::move(factor)), center_(std::move(center)) {
  if (factor_.is_zero()) throw InvalidArgument("similarity with zero factor");
}

Scalar Similarity::apply(const Scalar& x) const { return factor_ * (x - center_); }

Similarity Similarity::inverse() const {
  return Similarity(factor_.reciprocal(), -(factor_ * center_));
}

Position sim_map_position(const Similarity& s, const Position& p) {
  std::vector<Scalar> out;
  out.reserve(p.size());
  for (const Scalar& x : p.locations()) out.push_back(s.apply(x));
  return Position(p.universe(), std::move(out));
}

}  // namespace gathering
