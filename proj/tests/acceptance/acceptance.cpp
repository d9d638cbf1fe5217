// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gathering/adversary.hpp"
#include "gathering/fairness.hpp"
#include "gathering/properties.hpp"
#include "gathering/registry.hpp"
#include "gathering/sampling.hpp"
#include "gathering/trace_io.hpp"
#include "generators.hpp"

using namespace gathering;

namespace {

struct Collected {
  std::string label;
  Trace trace;
};

std::vector<Collected> g_traces;

struct Outcome {
  bool passed{true};
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

const RobotId L0{Side::Left, 0};
const RobotId R0{Side::Right, 0};

std::string str(const Verdict& v) {
  std::string s = std::string(to_string(v.kind));
  if (v.is_violated()) s += "(" + std::to_string(v.round) + ")";
  return s + "@" + std::to_string(v.horizon);
}

Outcome battery() {
  Outcome o;
  for (const std::string& sel : builtin_selectors()) {
    for (std::size_t n : {1U, 3U, 8U}) {
      const auto start = std::chrono::steady_clock::now();
      ImpossibilityRun run = run_impossibility(robogram_from_selector(sel), n, 1000);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const ImpossibilityReport& r = run.report;
      const std::string tag = sel + " n=" + std::to_string(n);
      o.require(r.split == Verdict::no_violation_up_to(1000), tag + " split " + str(r.split));
      o.require(r.gather.kind == GatherVerdict::Kind::NotWithinHorizon && r.gather.horizon == 1000,
                tag + " gather");
      o.require(r.kfair1 == Verdict::no_violation_up_to(1000), tag + " kfair:1 " + str(r.kfair1));
      o.require(r.bivalence.complete() && r.bivalence.checked == 1001, tag + " bivalence");
      o.require(secs < 10.0, tag + " took " + std::to_string(secs) + "s");
      char line[160];
      std::snprintf(line, sizeof line, "%-20s n=%zu branch=%-11s %.3fs", sel.c_str(), n,
                    std::string(to_string(r.probe.branch)).c_str(), secs);
      o.note(line);
      g_traces.push_back({tag, std::move(run.trace)});
    }
  }
  return o;
}

Outcome fairness() {
  Outcome o;
  const ImpossibilityRun alt = run_impossibility(robograms::center_of_mass(), 3, 1000);
  o.require(alt.report.probe.branch == AdversaryBranch::Alternating, "center-of-mass is alternating");
  const auto alt_actions = alt.trace.actions();
  o.require(check_kfair(alt_actions, 0) == Verdict::violated(0, 1000), "alternating k=0");
  o.require(check_kfair(alt_actions, 1) == Verdict::no_violation_up_to(1000), "alternating k=1");
  o.require(check_kfair(alt_actions, 2) == Verdict::no_violation_up_to(1000), "alternating k=2");

  const ImpossibilityRun swap = run_impossibility(robograms::to_other_occupied(), 1, 1000);
  o.require(swap.report.probe.branch == AdversaryBranch::SwapFsync, "to-other-occupied swaps");
  o.require(check_kfair(swap.trace.actions(), 0) == Verdict::no_violation_up_to(1000), "swap k=0");

  std::mt19937_64 rng(2024);
  const std::vector<std::string> sels = builtin_selectors();
  std::size_t fair_at[5] = {};
  for (int i = 0; i < 100; ++i) {
    const RobotUniverse u(1 + rng() % 3);
    const std::size_t k = rng() % 4;
    const std::string sel = sels[rng() % sels.size()];
    const Robogram r = robogram_from_selector(sel);
    DemonPtr d = make_random_kfair(u, k, Scalar(1), rng());
    Trace t = execute_prefix(r, *d, gathering::testing::any_position(u, rng), 200);
    const auto actions = t.actions();
    bool seen = false;
    for (std::size_t kk = 0; kk <= 4; ++kk) {
      const bool fair = !check_kfair(actions, kk).is_violated();
      o.require(!seen || fair, "monotonicity on random trace " + std::to_string(i));
      seen = seen || fair;
      fair_at[kk] += fair ? 1 : 0;
    }
    o.require(!check_kfair(actions, k).is_violated(), "random-kfair honours k");
    g_traces.push_back({"random-kfair " + sel, std::move(t)});
  }
  std::ostringstream s;
  s << "random traces fair at k=0..4:";
  for (std::size_t c : fair_at) s << " " << c;
  o.note(s.str());
  return o;
}

Outcome exactness() {
  Outcome o;
  ImpossibilityRun run = run_impossibility(robograms::center_of_mass(), 1, 200);
  for (std::size_t r = 0; r <= 200; ++r) {
    const Position& p = run.trace.position(r);
    Scalar d = p[R0] - p[L0];
    if (d.sign() < 0) d = -d;
    Scalar expected(1);
    for (std::size_t i = 0; i < r; ++i) expected /= Scalar(2);
    if (d != expected) {
      o.require(false, "distance after round " + std::to_string(r));
      break;
    }
  }
  const Position& last = run.trace.position(200);
  o.require(split(last), "split after round 200");
  o.note("distance after round 200 = 1/" + (last[R0] - last[L0]).reciprocal().to_string().substr(0, 20) +
         "... (2^200)");

  // Same schedule in double precision, for comparison only.
  double u = 0.0;
  double v = 1.0;
  std::size_t collapsed = 0;
  for (std::size_t r = 0; r < 200 && collapsed == 0; ++r) {
    if (r % 2 == 0) {
      u = u + (v - u) / 2;
    } else {
      v = v + (u - v) / 2;
    }
    if (u == v) collapsed = r + 1;
  }
  o.note("note (non-gating): double precision merges the piles after round " +
         std::to_string(collapsed));
  g_traces.push_back({"exactness", std::move(run.trace)});
  return o;
}

Outcome necessity() {
  Outcome o;
  const RobotUniverse u(1);
  DemonPtr d = make_alternating_demon(u);
  Trace t = execute_prefix(robograms::to_other_occupied(), *d,
                           Position::bivalent(u, Scalar(0), Scalar(1)), 100);
  const GatherVerdict v = check_will_gather(t);
  o.require(v.kind == GatherVerdict::Kind::TentativelyGathered, "gathers");
  o.require(v.round == 1, "gathers after round 1");
  o.note("alternating demon + to-other-occupied: gathered from position 1 at " +
         (v.point ? v.point->to_string() : std::string("-")));
  g_traces.push_back({"necessity", std::move(t)});
  return o;
}

Outcome mutual_exclusion() {
  Outcome o;
  std::mt19937_64 rng(77);
  const std::vector<std::string> sels = builtin_selectors();
  for (int i = 0; i < 200; ++i) {
    const RobotUniverse u(1 + rng() % 4);
    const std::string sel = sels[rng() % sels.size()];
    const Robogram r = robogram_from_selector(sel);
    const Position p0 = gathering::testing::any_position(u, rng);
    DemonPtr d = (i % 2 == 0) ? make_random_kfair(u, rng() % 3, Scalar(1), rng())
                              : make_round_robin(u, gathering::testing::nonzero_scalar(rng));
    g_traces.push_back({"random " + sel, execute_prefix(r, *d, p0, 60)});
  }
  std::size_t gathered = 0;
  for (const Collected& c : g_traces) {
    const bool unsplit_free = !check_always_split(c.trace).is_violated();
    const bool gathers = check_will_gather(c.trace).gathered();
    gathered += gathers ? 1 : 0;
    o.require(!(unsplit_free && gathers), "trace " + c.label);
  }
  std::size_t split_count = 0;
  for (int i = 0; i < 10000; ++i) {
    const Position p = gathering::testing::any_position(RobotUniverse(1 + rng() % 6), rng);
    if (split(p)) {
      ++split_count;
      o.require(!gathered_location(p).has_value(), "pointwise");
    }
  }
  o.note(std::to_string(g_traces.size()) + " traces (" + std::to_string(gathered) +
         " gathered), " + std::to_string(split_count) + "/10000 random positions split");
  return o;
}

Outcome invariance() {
  Outcome o;
  for (const std::string& sel : builtin_selectors()) {
    o.require(sample_invariance(robogram_from_selector(sel), 1000, 5).passed(), sel);
  }
  const InvarianceSampleResult leak = sample_invariance(robograms::broken_id_leak(), 1000, 5);
  o.require(!leak.passed(), "broken-id-leak has a counterexample");
  if (leak.counterexample) {
    const InvarianceCounterexample& cx = *leak.counterexample;
    std::ostringstream s;
    s << "broken-id-leak counterexample: position {";
    for (std::size_t r = 0; r < cx.position.size(); ++r) {
      s << (r ? ", " : "") << cx.position.universe().id(r).to_string() << "=" << cx.position.at_rank(r);
    }
    s << "} permutation {";
    for (std::size_t r = 0; r < cx.position.size(); ++r) {
      const RobotId id = cx.position.universe().id(r);
      s << (r ? ", " : "") << id.to_string() << "->" << cx.permutation.apply(id).to_string();
    }
    s << "} gives " << cx.original << " vs " << cx.permuted;
    o.note(s.str());
  }
  return o;
}

Outcome equivariance() {
  Outcome o;
  std::mt19937_64 rng(99);
  const std::vector<std::string> sels = builtin_selectors();
  auto map = [](const Position& p, const std::function<Scalar(const Scalar&)>& f) {
    std::vector<Scalar> locs;
    for (const Scalar& x : p.locations()) locs.push_back(f(x));
    return Position(p.universe(), std::move(locs));
  };
  for (int i = 0; i < 100; ++i) {
    const Robogram r = robogram_from_selector(sels[rng() % sels.size()]);
    const RobotUniverse u(1 + rng() % 3);
    const Position p0 = gathering::testing::any_position(u, rng);
    const auto actions = gathering::testing::any_actions(u, 10, rng);
    const Scalar c = gathering::testing::nonzero_scalar(rng);
    const Scalar s = gathering::testing::nonzero_scalar(rng);

    DemonPtr base_demon = make_cyclic(actions, "fixed");
    const Trace base = execute_prefix(r, *base_demon, p0, 10);
    DemonPtr same = make_cyclic(actions, "fixed");
    const Trace moved =
        execute_prefix(r, *same, map(p0, [&](const Scalar& x) { return x + c; }), 10);
    DemonPtr slower = make_rescaled(make_cyclic(actions, "fixed"), s.reciprocal());
    const Trace zoomed =
        execute_prefix(r, *slower, map(p0, [&](const Scalar& x) { return x * s; }), 10);
    for (std::size_t k = 0; k <= 10; ++k) {
      o.require(moved.position(k) == map(base.position(k), [&](const Scalar& x) { return x + c; }),
                "translation, instance " + std::to_string(i));
      o.require(zoomed.position(k) == map(base.position(k), [&](const Scalar& x) { return x * s; }),
                "scale, instance " + std::to_string(i));
    }
  }
  o.note("100 instances, translation and scale");
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (const Collected& c : g_traces) {
    const std::string text = trace_to_string(c.trace);
    Trace back;
    try {
      back = trace_from_string(text);
    } catch (const std::exception& e) {
      o.require(false, c.label + " re-parse: " + e.what());
      continue;
    }
    o.require(trace_to_string(back) == text, c.label + " re-serialise");
    const Robogram r = robogram_from_selector(back.robogram);
    o.require(!find_replay_mismatch(r, back).has_value(), c.label + " replay");
    o.require(check_always_split(back) == check_always_split(c.trace), c.label + " always-split");
    o.require(check_will_gather(back) == check_will_gather(c.trace), c.label + " will-gather");
    if (c.trace.horizon() > 0) {
      for (std::size_t k : {0U, 1U, 2U}) {
        o.require(check_kfair(back.actions(), k) == check_kfair(c.trace.actions(), k),
                  c.label + " kfair");
      }
    }
  }
  o.note(std::to_string(g_traces.size()) + " traces re-parsed, replayed and re-checked");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 impossibility battery", battery},
      {"2 fairness calculus", fairness},
      {"3 exactness witness", exactness},
      {"4 demon-choice necessity", necessity},
      {"5 split/gathered mutual exclusion", mutual_exclusion},
      {"6 permutation invariance", invariance},
      {"7 execution equivariance", equivariance},
      {"8 trace round-trip", round_trip},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    for (const std::string& n : o.notes) std::cout << "    " << n << "\n";
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.name << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
