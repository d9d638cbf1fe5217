#include <doctest.h>

#include <random>

#include "gathering/error.hpp"
#include "gathering/robogram.hpp"
#include "gathering/sampling.hpp"
#include "generators.hpp"

using namespace gathering;
using gathering::testing::any_position;

namespace {

Position from_spectrum_01(std::size_t zeros, std::size_t ones) {
  std::vector<Scalar> locs(zeros, Scalar(0));
  locs.insert(locs.end(), ones, Scalar(1));
  const RobotUniverse u(locs.size() / 2);
  return Position(u, std::move(locs));
}

}  // namespace

TEST_CASE("built-in robograms on small views") {
  CHECK(robograms::center_of_mass().evaluate(from_spectrum_01(1, 1)) == Scalar(1, 2));
  CHECK(robograms::center_of_mass().evaluate(from_spectrum_01(3, 1)) == Scalar(1, 4));

  const RobotUniverse u(2);
  const Position spread(u, {Scalar(0), Scalar(0), Scalar(1), Scalar(5)});
  CHECK(robograms::to_max().evaluate(spread) == Scalar(5));
  CHECK(robograms::to_min().evaluate(spread) == Scalar(0));
  CHECK(robograms::stay().evaluate(spread) == Scalar(0));
  CHECK(robograms::convex(Scalar(1, 3)).evaluate(spread) == Scalar(1, 2));

  // to-other-occupied: exactly two locations, one of them the observer's.
  CHECK(robograms::to_other_occupied().evaluate(from_spectrum_01(1, 1)) == Scalar(1));
  CHECK(robograms::to_other_occupied().evaluate(
            Position(u, {Scalar(0), Scalar(-2), Scalar(-2), Scalar(0)})) == Scalar(-2));
  CHECK(robograms::to_other_occupied().evaluate(spread) == Scalar(0));
  CHECK(robograms::to_other_occupied().evaluate(Position(u, Scalar(0))) == Scalar(0));
  CHECK(robograms::to_other_occupied().evaluate(
            Position(u, {Scalar(3), Scalar(3), Scalar(4), Scalar(4)})) == Scalar(0));
}

TEST_CASE("stay returns the observer origin for any view") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const RobotUniverse u(1 + rng() % 4);
    CHECK(robograms::stay().evaluate(any_position(u, rng)) == Scalar(0));
  }
}

TEST_CASE("selectors resolve to named robograms") {
  for (const std::string& sel : builtin_selectors()) {
    const Robogram r = robogram_from_selector(sel);
    CHECK(r.name() == sel);
    CHECK(r.kind() == RobogramKind::SpectrumBased);
  }
  CHECK(robogram_from_selector("broken-id-leak").kind() == RobogramKind::Raw);
  CHECK(robogram_from_selector("convex:2/6").name() == "convex:1/3");
  CHECK_THROWS_AS((void)robogram_from_selector("teleport"), InvalidArgument);
  CHECK_THROWS_AS((void)robogram_from_selector("convex:abc"), InvalidArgument);
  CHECK_THROWS_AS((void)robogram_from_selector("convex:"), InvalidArgument);
}

TEST_CASE("check_invariance") {
  const RobotUniverse u(1);
  const Position p(u, {Scalar(0), Scalar(1)});
  const Permutation swap = Permutation::transposition(u, {Side::Left, 0}, {Side::Right, 0});

  // Hand evaluation: L0 sits at 0 before the swap and at 1 after it.
  CHECK_FALSE(check_invariance(robograms::broken_id_leak(), p, swap));
  CHECK(check_invariance(robograms::broken_id_leak(), p, Permutation::identity(u)));
  CHECK(check_invariance(robograms::center_of_mass(), p, swap));
}

TEST_CASE("spectrum-based built-ins are permutation invariant") {
  std::mt19937_64 rng(12);
  for (const std::string& sel : builtin_selectors()) {
    const Robogram r = robogram_from_selector(sel);
    for (int i = 0; i < 1000; ++i) {
      const RobotUniverse u(1 + rng() % 5);
      const Position p = any_position(u, rng);
      REQUIRE(check_invariance(r, p, Permutation::random(u, rng)));
    }
  }
}

TEST_CASE("spectrum-based results depend only on the spectrum") {
  // Two positions with equal spectra but different robot assignments.
  std::mt19937_64 rng(13);
  for (const std::string& sel : builtin_selectors()) {
    const Robogram r = robogram_from_selector(sel);
    for (int i = 0; i < 200; ++i) {
      const RobotUniverse u(1 + rng() % 4);
      const Position p = any_position(u, rng);
      std::vector<Scalar> shuffled(p.locations().begin(), p.locations().end());
      std::reverse(shuffled.begin(), shuffled.end());
      const Position q(u, shuffled);
      REQUIRE(spectrum(p) == spectrum(q));
      CHECK(r.evaluate(p) == r.evaluate(q));
    }
  }
}

TEST_CASE("raw robograms propagate non-representable destinations") {
  const Robogram sqrt2 = Robogram::raw("sqrt-of-two", [](const Position&) -> Scalar {
    throw NonRepresentableDestination("sqrt(2) is irrational");
  });
  const RobotUniverse u(1);
  CHECK_THROWS_AS((void)sqrt2.evaluate(Position(u)), NonRepresentableDestination);
  CHECK_THROWS_AS((void)check_invariance(sqrt2, Position(u), Permutation::identity(u)),
                  NonRepresentableDestination);
}

TEST_CASE("sampled invariance finds the identity leak") {
  CHECK(sample_invariance(robograms::center_of_mass(), 1000, 7).passed());
  const InvarianceSampleResult leak = sample_invariance(robograms::broken_id_leak(), 1000, 7);
  REQUIRE_FALSE(leak.passed());
  const auto& cx = *leak.counterexample;
  CHECK(cx.original != cx.permuted);
  CHECK(robograms::broken_id_leak().evaluate(cx.position) == cx.original);
  CHECK(robograms::broken_id_leak().evaluate(permute_position(cx.position, cx.permutation)) ==
        cx.permuted);
}
