#include "gathering/sampling.hpp"

#include <vector>

namespace gathering {

Scalar random_scalar(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(rng() % 17) - 8;
  const auto den = static_cast<std::int64_t>(rng() % 4) + 1;
  return Scalar(num, den);
}

Position random_position(const RobotUniverse& universe, std::mt19937_64& rng) {
  const std::size_t m = universe.size();
  if (m == 0) return Position(universe);
  const std::size_t pool_size = 1 + rng() % m;
  std::vector<Scalar> pool;
  pool.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(random_scalar(rng));
  std::vector<Scalar> locations;
  locations.reserve(m);
  for (std::size_t r = 0; r < m; ++r) locations.push_back(pool[rng() % pool_size]);
  return Position(universe, std::move(locations));
}

InvarianceSampleResult sample_invariance(const Robogram& r, std::size_t samples,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvarianceSampleResult result;
  for (std::size_t i = 0; i < samples; ++i) {
    const RobotUniverse universe(1 + rng() % 4);
    Position p = random_position(universe, rng);
    Permutation sigma = Permutation::random(universe, rng);
    ++result.samples_run;
    Scalar original = r.evaluate(p);
    Scalar permuted = r.evaluate(permute_position(p, sigma));
    if (original != permuted) {
      result.counterexample = InvarianceCounterexample{
          std::move(p), std::move(sigma), std::move(original), std::move(permuted)};
      break;
    }
  }
  return result;
}

}  // namespace gathering
