#include <doctest.h>

#include <random>
#include <sstream>

#include "gathering/error.hpp"
#include "gathering/registry.hpp"
#include "gathering/trace_io.hpp"
#include "generators.hpp"

using namespace gathering;
using gathering::testing::any_position;

namespace {

Trace small_trace() {
  const RobotUniverse u(1);
  const Robogram r = robograms::center_of_mass();
  DemonPtr d = make_alternating_demon(u);
  return execute_prefix(r, *d, Position::bivalent(u, Scalar(0), Scalar(1)), 2);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("trace text layout") {
  const std::vector<std::string> lines = lines_of(trace_to_string(small_trace()));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        R"({"robogram":"center-of-mass","demon":"adversary","n":1,"p0":{"L0":"0/1","R0":"1/1"}})");
  CHECK(lines[1] ==
        R"({"round":0,"frames":{"L0":"1/1","R0":"0/1"},"post":{"L0":"1/2","R0":"1/1"}})");
  CHECK(lines[2] ==
        R"({"round":1,"frames":{"L0":"0/1","R0":"-2/1"},"post":{"L0":"1/2","R0":"3/4"}})");
}

TEST_CASE("traces round-trip byte for byte") {
  std::mt19937_64 rng(61);
  for (const std::string& sel : builtin_selectors()) {
    const Robogram r = robogram_from_selector(sel);
    for (int i = 0; i < 5; ++i) {
      const RobotUniverse u(1 + rng() % 3);
      DemonPtr d = make_random_kfair(u, rng() % 3, Scalar(-3, 7), rng());
      const Trace t = execute_prefix(r, *d, any_position(u, rng), 25);
      const std::string text = trace_to_string(t);
      const Trace back = trace_from_string(text);
      CHECK(back.robogram == t.robogram);
      CHECK(back.demon == t.demon);
      CHECK(back.initial == t.initial);
      CHECK(back.horizon() == t.horizon());
      CHECK(back.actions() == t.actions());
      CHECK(trace_to_string(back) == text);
      CHECK_FALSE(find_replay_mismatch(r, back).has_value());
    }
  }
}

TEST_CASE("malformed traces are rejected") {
  const std::string good = trace_to_string(small_trace());
  const std::vector<std::string> lines = lines_of(good);
  auto join = [](const std::vector<std::string>& ls) {
    std::string s;
    for (const std::string& l : ls) s += l + "\n";
    return s;
  };

  CHECK_NOTHROW((void)trace_from_string(good + "\n\n"));
  CHECK_THROWS_AS((void)trace_from_string(""), TraceFormatError);
  CHECK_THROWS_AS((void)trace_from_string("not json\n"), TraceFormatError);
  CHECK_THROWS_AS((void)trace_from_string(R"({"robogram":"stay","demon":"fsync","p0":{}})"),
                  TraceFormatError);
  CHECK_THROWS_AS(
      (void)trace_from_string(R"({"robogram":"stay","demon":"fsync","n":0,"p0":{}})" "\n"),
      TraceFormatError);
  CHECK_THROWS_AS((void)trace_from_string(join({lines[0], lines[2]})), TraceFormatError);
  CHECK_THROWS_AS((void)trace_from_string(join({lines[0], lines[1], lines[1]})), TraceFormatError);

  std::string bad_id = good;
  bad_id.replace(bad_id.find("\"R0\""), 4, "\"R7\"");
  CHECK_THROWS_AS((void)trace_from_string(bad_id), TraceFormatError);

  std::string bad_scalar = good;
  bad_scalar.replace(bad_scalar.find("\"1/2\""), 5, "\"0.5\"");
  CHECK_THROWS_AS((void)trace_from_string(bad_scalar), TraceFormatError);

  std::string zero_den = good;
  zero_den.replace(zero_den.find("\"3/4\""), 5, "\"3/0\"");
  CHECK_THROWS_AS((void)trace_from_string(zero_den), TraceFormatError);
}

TEST_CASE("verdict json") {
  CHECK(verdict_json("kfair:0", Verdict::violated(0, 10)).dump() ==
        R"({"property":"kfair:0","verdict":"Violated","round":0,"horizon":10})");
  CHECK(verdict_json("always-split", Verdict::no_violation_up_to(4)).dump() ==
        R"({"property":"always-split","verdict":"NoViolationUpTo","horizon":4})");
  const GatherVerdict g{GatherVerdict::Kind::TentativelyGathered, 1, Scalar(1), 5};
  CHECK(verdict_json("will-gather", g).dump() ==
        R"({"property":"will-gather","verdict":"TentativelyGathered","round":1,"point":"1/1","horizon":5})");
  const GatherVerdict none{GatherVerdict::Kind::NotWithinHorizon, 0, std::nullopt, 5};
  CHECK(verdict_json("will-gather", none).dump() ==
        R"({"property":"will-gather","verdict":"NotWithinHorizon","horizon":5})");
}
