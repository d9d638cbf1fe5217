#include "gathering/demon.hpp"

#include <random>
#include <utility>

#include "gathering/error.hpp"

namespace gathering {

DemonicAction::DemonicAction(RobotUniverse universe, const Scalar& fill)
    : universe_(universe), frames_(universe.size(), fill) {}

DemonicAction::DemonicAction(RobotUniverse universe, std::vector<Scalar> frames)
    : universe_(universe), frames_(std::move(frames)) {
  if (frames_.size() != universe_.size()) {
    throw InvalidArgument("demonic action size does not match universe");
  }
}

namespace {

class FsyncDemon final : public Demon {
 public:
  FsyncDemon(FactorPolicy policy, std::string name)
      : policy_(std::move(policy)), name_(std::move(name)) {}

  DemonicAction next(std::size_t /*round*/, const Position& current) override {
    DemonicAction action(current.universe());
    for (const RobotId& id : current.universe().ids()) {
      Scalar factor = policy_(current, id);
      if (factor.is_zero()) {
        throw ZeroFactorFromPolicy("policy of demon " + name_ +
                                   " returned 0 for " + id.to_string());
      }
      action.set(id, std::move(factor));
    }
    return action;
  }

  [[nodiscard]] std::string name() const override { return name_; }

 private:
  FactorPolicy policy_;
  std::string name_;
};

class RoundRobinDemon final : public Demon {
 public:
  RoundRobinDemon(RobotUniverse universe, Scalar factor)
      : universe_(universe), factor_(std::move(factor)) {}

  DemonicAction next(std::size_t round, const Position& /*current*/) override {
    DemonicAction action(universe_);
    action.set_rank(round % universe_.size(), factor_);
    return action;
  }

  [[nodiscard]] std::string name() const override {
    return "round-robin:" + factor_.to_string();
  }

 private:
  RobotUniverse universe_;
  Scalar factor_;
};

// Tracks, for every ordered pair (g, h), how many times h was activated since
// g's last activation. A round may activate h only if every inactive g still
// has budget left for h; robots that would overflow are pulled into the round.
class RandomKFairDemon final : public Demon {
 public:
  RandomKFairDemon(RobotUniverse universe, std::size_t k, Scalar factor,
                   std::uint64_t seed)
      : universe_(universe),
        k_(k),
        factor_(std::move(factor)),
        seed_(seed),
        rng_(seed),
        since_(universe.size() * universe.size(), 0) {}

  DemonicAction next(std::size_t /*round*/, const Position& /*current*/) override {
    const std::size_t m = universe_.size();
    std::vector<bool> chosen(m, false);
    bool any = false;
    for (std::size_t r = 0; r < m; ++r) {
      chosen[r] = (rng_() & 1U) != 0;
      any = any || chosen[r];
    }
    if (!any) chosen[rng_() % m] = true;

    // Close the set under "activating h would exceed g's budget".
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t g = 0; g < m; ++g) {
        if (chosen[g]) continue;
        for (std::size_t h = 0; h < m; ++h) {
          if (h != g && chosen[h] && count(g, h) >= k_) {
            chosen[g] = true;
            changed = true;
            break;
          }
        }
      }
    }

    DemonicAction action(universe_);
    for (std::size_t g = 0; g < m; ++g) {
      if (chosen[g]) {
        action.set_rank(g, factor_);
        for (std::size_t h = 0; h < m; ++h) count(g, h) = 0;
      } else {
        for (std::size_t h = 0; h < m; ++h) {
          if (chosen[h]) ++count(g, h);
        }
      }
    }
    return action;
  }

  [[nodiscard]] std::string name() const override {
    return "random-kfair:" + std::to_string(k_) + ":" + std::to_string(seed_);
  }

 private:
  std::size_t& count(std::size_t g, std::size_t h) {
    return since_[g * universe_.size() + h];
  }

  RobotUniverse universe_;
  std::size_t k_;
  Scalar factor_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> since_;
};

class CyclicDemon final : public Demon {
 public:
  CyclicDemon(std::vector<DemonicAction> actions, std::string name)
      : actions_(std::move(actions)), name_(std::move(name)) {}

  DemonicAction next(std::size_t round, const Position& /*current*/) override {
    return actions_[round % actions_.size()];
  }

  [[nodiscard]] std::string name() const override { return name_; }

 private:
  std::vector<DemonicAction> actions_;
  std::string name_;
};

class RescaledDemon final : public Demon {
 public:
  RescaledDemon(DemonPtr inner, Scalar scale)
      : inner_(std::move(inner)), scale_(std::move(scale)) {}

  DemonicAction next(std::size_t round, const Position& current) override {
    DemonicAction action = inner_->next(round, current);
    for (std::size_t r = 0; r < action.universe().size(); ++r) {
      action.set_rank(r, action.frame_at_rank(r) * scale_);
    }
    return action;
  }

  [[nodiscard]] std::string name() const override {
    return inner_->name() + "*" + scale_.to_string();
  }

 private:
  DemonPtr inner_;
  Scalar scale_;
};

}  // namespace

DemonPtr make_fsync(FactorPolicy policy, std::string name) {
  return std::make_unique<FsyncDemon>(std::move(policy), std::move(name));
}

DemonPtr make_round_robin(RobotUniverse universe, const Scalar& factor) {
  if (factor.is_zero()) throw InvalidArgument("round-robin factor must be nonzero");
  universe.require_inhabited();
  return std::make_unique<RoundRobinDemon>(universe, factor);
}

DemonPtr make_random_kfair(RobotUniverse universe, std::size_t k,
                           const Scalar& factor, std::uint64_t seed) {
  if (factor.is_zero()) throw InvalidArgument("random-kfair factor must be nonzero");
  universe.require_inhabited();
  return std::make_unique<RandomKFairDemon>(universe, k, factor, seed);
}

DemonPtr make_cyclic(std::vector<DemonicAction> actions, std::string name) {
  if (actions.empty()) throw InvalidArgument("cyclic demon needs at least one action");
  return std::make_unique<CyclicDemon>(std::move(actions), std::move(name));
}

DemonPtr make_rescaled(DemonPtr inner, const Scalar& scale) {
  if (scale.is_zero()) throw InvalidArgument("rescaling factor must be nonzero");
  return std::make_unique<RescaledDemon>(std::move(inner), scale);
}

}  // namespace gathering
