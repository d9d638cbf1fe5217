#include "gathering/adversary.hpp"

#include <random>

#include "gathering/error.hpp"
#include "gathering/fairness.hpp"

namespace gathering {

std::string_view to_string(AdversaryBranch branch) {
  return branch == AdversaryBranch::SwapFsync ? "SwapFsync" : "Alternating";
}

Position canonical_view(std::size_t n) {
  RobotUniverse universe(n);
  universe.require_inhabited();
  return Position::bivalent(universe, Scalar(0), Scalar(1));
}

FirstMoveProbe probe_first_move(const Robogram& r, std::size_t n) {
  Scalar delta = r.evaluate(canonical_view(n));
  const bool onto_other = delta == Scalar(1);
  return FirstMoveProbe{std::move(delta), branch_for(onto_other)};
}

namespace {

// Factor that normalizes the view of a robot at u to the canonical one, with
// the opposite pile (read off robot 0 of the other side) at 1. Coinciding
// piles have no such frame; the identity frame keeps the demon total.
Scalar normalizing_factor(const Position& p, const RobotId& robot) {
  const Scalar& own = p[robot];
  const Scalar& other = p[RobotId{opposite(robot.side), 0}];
  if (own == other) return Scalar(1);
  return (other - own).reciprocal();
}

class PileDemon final : public Demon {
 public:
  PileDemon(RobotUniverse universe, AdversaryBranch branch)
      : universe_(universe), branch_(branch) {}

  DemonicAction next(std::size_t round, const Position& current) override {
    DemonicAction action(universe_);
    for (const RobotId& id : universe_.ids()) {
      if (branch_ == AdversaryBranch::Alternating) {
        const Side turn = round % 2 == 0 ? Side::Left : Side::Right;
        if (id.side != turn) continue;
      }
      action.set(id, normalizing_factor(current, id));
    }
    return action;
  }

  [[nodiscard]] std::string name() const override { return "adversary"; }

 private:
  RobotUniverse universe_;
  AdversaryBranch branch_;
};

bool is_bivalent(const Position& p) {
  const Spectrum s = spectrum(p);
  if (s.size() != 2) return false;
  const std::size_t n = p.universe().pile_size();
  return s.begin()->second == n && s.rbegin()->second == n;
}

}  // namespace

DemonPtr make_swap_demon(RobotUniverse universe) {
  universe.require_inhabited();
  return std::make_unique<PileDemon>(universe, AdversaryBranch::SwapFsync);
}

DemonPtr make_alternating_demon(RobotUniverse universe) {
  universe.require_inhabited();
  return std::make_unique<PileDemon>(universe, AdversaryBranch::Alternating);
}

DemonPtr build_adversary_demon(const Robogram& r, std::size_t n, const Scalar& a,
                               const Scalar& b) {
  RobotUniverse universe(n);
  universe.require_inhabited();
  if (a == b) {
    throw DegenerateInitial("adversary needs two distinct piles, both at " +
                            a.to_string());
  }
  return std::make_unique<PileDemon>(universe, probe_first_move(r, n).branch);
}

BivalenceCertificate certify_bivalence(const Trace& t) {
  BivalenceCertificate cert;
  for (std::size_t i = 0; i <= t.horizon(); ++i) {
    ++cert.checked;
    if (!is_bivalent(t.position(i))) {
      cert.first_failure = i;
      break;
    }
  }
  return cert;
}

bool ImpossibilityReport::refutes_gathering() const {
  return split.kind == Verdict::Kind::NoViolationUpTo && !gather.gathered() &&
         kfair1.kind == Verdict::Kind::NoViolationUpTo;
}

bool ImpossibilityReport::consistent() const {
  return split.kind != Verdict::Kind::NoViolationUpTo || !gather.gathered();
}

ImpossibilityRun run_impossibility(const Robogram& r, std::size_t n,
                                   std::size_t horizon, std::uint64_t seed) {
  RobotUniverse universe(n);
  universe.require_inhabited();

  ImpossibilityReport report;
  report.robogram = r.name();
  report.n = n;
  report.horizon = horizon;
  report.probe = probe_first_move(r, n);

  const Position view = canonical_view(n);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < kInvarianceProbeSamples; ++i) {
    if (!check_invariance(r, view, Permutation::random(universe, rng))) {
      report.invariance_ok = false;
      break;
    }
  }

  const Position p0 = Position::bivalent(universe, Scalar(0), Scalar(1));
  DemonPtr demon = build_adversary_demon(r, n, Scalar(0), Scalar(1));
  const Spectrum canonical = spectrum(view);
  Trace trace = execute_prefix(
      r, *demon, p0, horizon,
      [&](const RobotId&, const Position& local, const Scalar&) {
        if (report.views_canonical && spectrum(local) != canonical) {
          report.views_canonical = false;
        }
      });

  report.split = check_always_split(trace);
  report.gather = check_will_gather(trace);
  report.bivalence = certify_bivalence(trace);
  if (horizon > 0) {
    const auto actions = trace.actions();
    report.kfair0 = check_kfair(actions, 0);
    report.kfair1 = check_kfair(actions, 1);
  } else {
    report.kfair0 = Verdict::no_violation_up_to(0);
    report.kfair1 = Verdict::no_violation_up_to(0);
  }
  return ImpossibilityRun{std::move(trace), std::move(report)};
}

}  // namespace gathering
