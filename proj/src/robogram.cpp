#include "gathering/robogram.hpp"

#include <utility>

#include "gathering/error.hpp"

namespace gathering {

Robogram Robogram::spectrum_based(std::string name, SpectrumAlgo algo) {
  return Robogram(std::move(name), RobogramKind::SpectrumBased,
                  [algo = std::move(algo)](const Position& p) {
                    return algo(spectrum(p));
                  });
}

Robogram Robogram::raw(std::string name, RawAlgo algo) {
  return Robogram(std::move(name), RobogramKind::Raw, std::move(algo));
}

Scalar Robogram::evaluate(const Position& local_view) const {
  return algo_(local_view);
}

bool check_invariance(const Robogram& r, const Position& p,
                      const Permutation& sigma) {
  return r.evaluate(p) == r.evaluate(permute_position(p, sigma));
}

namespace robograms {
namespace {

Scalar mean(const Spectrum& s) {
  Scalar sum;
  std::size_t count = 0;
  for (const auto& [x, mult] : s) {
    sum += x * Scalar(static_cast<std::int64_t>(mult));
    count += mult;
  }
  if (count == 0) return Scalar{};
  return sum / Scalar(static_cast<std::int64_t>(count));
}

}  // namespace

Robogram stay() {
  return Robogram::spectrum_based("stay", [](const Spectrum&) { return Scalar{}; });
}

Robogram center_of_mass() {
  return Robogram::spectrum_based("center-of-mass", mean);
}

Robogram to_other_occupied() {
  return Robogram::spectrum_based("to-other-occupied", [](const Spectrum& s) {
    if (s.size() != 2 || !s.contains(Scalar{})) return Scalar{};
    for (const auto& [x, mult] : s) {
      if (!x.is_zero()) return x;
    }
    return Scalar{};
  });
}

Robogram to_max() {
  return Robogram::spectrum_based("to-max", [](const Spectrum& s) {
    return s.empty() ? Scalar{} : s.rbegin()->first;
  });
}

Robogram to_min() {
  return Robogram::spectrum_based("to-min", [](const Spectrum& s) {
    return s.empty() ? Scalar{} : s.begin()->first;
  });
}

Robogram convex(const Scalar& lambda) {
  return Robogram::spectrum_based(
      "convex:" + lambda.to_string(),
      [lambda](const Spectrum& s) { return lambda * mean(s); });
}

Robogram broken_id_leak() {
  return Robogram::raw("broken-id-leak", [](const Position& p) {
    return p[RobotId{Side::Left, 0}];
  });
}

}  // namespace robograms

Robogram robogram_from_selector(std::string_view selector) {
  if (selector == "stay") return robograms::stay();
  if (selector == "center-of-mass") return robograms::center_of_mass();
  if (selector == "to-other-occupied") return robograms::to_other_occupied();
  if (selector == "to-max") return robograms::to_max();
  if (selector == "to-min") return robograms::to_min();
  if (selector == "broken-id-leak") return robograms::broken_id_leak();
  constexpr std::string_view kConvex = "convex:";
  if (selector.starts_with(kConvex)) {
    return robograms::convex(Scalar::parse(selector.substr(kConvex.size())));
  }
  throw InvalidArgument("unknown robogram \"" + std::string(selector) + "\"");
}

std::vector<std::string> builtin_selectors() {
  return {"stay",   "center-of-mass", "to-other-occupied",
          "to-max", "to-min",         "convex:1/3"};
}

}  // namespace gathering
