#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gathering/adversary.hpp"
#include "gathering/error.hpp"
#include "gathering/execution.hpp"
#include "gathering/fairness.hpp"
#include "gathering/properties.hpp"
#include "gathering/registry.hpp"
#include "gathering/robogram.hpp"
#include "gathering/sampling.hpp"
#include "gathering/trace_io.hpp"

namespace gathering::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 0;
constexpr const char* kDefaultInit = "bivalent:0/1:1/1";

/// Usage problems: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("malformed " + std::string(what) + " \"" + std::string(text) + "\"");
  }
  return value;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LCM_SEED"); env != nullptr && *env != '\0') {
    return parse_u64(env, "LCM_SEED");
  }
  return kDefaultSeed;
}

struct ScenarioConfig {
  std::optional<std::string> robogram;
  std::optional<std::string> demon;
  std::optional<std::size_t> n;
  std::optional<std::string> init;
  std::optional<std::size_t> horizon;
  std::optional<std::string> output;

  // Fields set in `over` replace ours.
  void merge(const ScenarioConfig& over) {
    if (over.robogram) robogram = over.robogram;
    if (over.demon) demon = over.demon;
    if (over.n) n = over.n;
    if (over.init) init = over.init;
    if (over.horizon) horizon = over.horizon;
    if (over.output) output = over.output;
  }
};

ScenarioConfig config_from_json(const json& obj) {
  if (!obj.is_object()) throw UsageError("scenario config must be a JSON object");
  ScenarioConfig c;
  for (const auto& [key, value] : obj.items()) {
    if (key == "scenarios") continue;
    if (key == "robogram" || key == "demon" || key == "output") {
      if (!value.is_string()) throw UsageError("config field " + key + " must be a string");
      (key == "robogram" ? c.robogram : key == "demon" ? c.demon : c.output) =
          value.get<std::string>();
    } else if (key == "n" || key == "horizon") {
      if (!value.is_number_unsigned()) {
        throw UsageError("config field " + key + " must be a non-negative integer");
      }
      (key == "n" ? c.n : c.horizon) = value.get<std::size_t>();
    } else if (key == "init") {
      if (value.is_string()) {
        c.init = value.get<std::string>();
      } else if (value.is_object()) {
        std::string joined;
        for (const auto& [id, loc] : value.items()) {
          if (!loc.is_string()) throw UsageError("init locations must be \"num/den\" strings");
          if (!joined.empty()) joined += ',';
          joined += id + "=" + loc.get<std::string>();
        }
        c.init = joined;
      } else {
        throw UsageError("config field init must be a string or an object");
      }
    } else {
      throw UsageError("unknown config field \"" + key + "\"");
    }
  }
  return c;
}

/// "bivalent:<a>:<b>" or a comma-separated list "L0=<num/den>,R0=<num/den>,...".
Position parse_init(const std::string& text, const RobotUniverse& universe) {
  constexpr std::string_view kBivalent = "bivalent:";
  if (text.starts_with(kBivalent)) {
    const std::string_view rest = std::string_view(text).substr(kBivalent.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw UsageError("expected bivalent:<a>:<b>");
    return Position::bivalent(universe, Scalar::parse(rest.substr(0, colon)),
                              Scalar::parse(rest.substr(colon + 1)));
  }
  Position p(universe);
  std::vector<bool> seen(universe.size(), false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("init entry \"" + item + "\" lacks '='");
    const std::size_t rank = universe.rank(RobotId::parse(item.substr(0, eq)));
    if (seen[rank]) throw UsageError("init lists " + item.substr(0, eq) + " twice");
    p.set_rank(rank, Scalar::parse(item.substr(eq + 1)));
    seen[rank] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw UsageError("init must give a location for every robot");
  }
  return p;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct Outcome {
  int code{kExitOk};
  std::string stdout_text;
  std::string stderr_text;
};

Outcome run_scenario(const ScenarioConfig& c) {
  Outcome o;
  std::optional<Robogram> robogram;
  DemonPtr demon;
  Position p0;
  try {
    if (!c.robogram) throw UsageError("missing --robogram");
    if (!c.demon) throw UsageError("missing --demon");
    if (!c.n) throw UsageError("missing --n");
    if (!c.horizon) throw UsageError("missing --horizon");
    if (*c.n == 0) throw UsageError("--n must be at least 1");
    robogram = robogram_from_selector(*c.robogram);
    p0 = parse_init(c.init.value_or(kDefaultInit), RobotUniverse(*c.n));
    demon = demon_from_selector(*c.demon, *robogram, p0);
  } catch (const std::exception& e) {
    return Outcome{kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }

  try {
    const Trace trace = execute_prefix(*robogram, *demon, p0, *c.horizon);
    if (c.output) {
      std::ofstream out(*c.output);
      if (!out) throw std::runtime_error("cannot write " + *c.output);
      write_trace(out, trace);
      if (!out) throw std::runtime_error("write failed for " + *c.output);
    } else {
      o.stdout_text = trace_to_string(trace);
    }
  } catch (const Error& e) {
    std::string where = e.round() ? " at round " + std::to_string(*e.round()) : "";
    return Outcome{kExitRuntime, "", "runtime error" + where + ": " + e.what() + "\n"};
  } catch (const std::exception& e) {
    return Outcome{kExitRuntime, "", std::string("runtime error: ") + e.what() + "\n"};
  }
  return o;
}

int cmd_simulate(const ScenarioConfig& flags, const std::optional<std::string>& config_path,
                 std::size_t jobs, std::ostream& out, std::ostream& err) {
  std::vector<ScenarioConfig> scenarios;
  try {
    if (config_path) {
      const json root = load_json_file(*config_path);
      ScenarioConfig base = config_from_json(root);
      if (const auto it = root.find("scenarios"); it != root.end()) {
        if (!it->is_array() || it->empty()) {
          throw UsageError("\"scenarios\" must be a non-empty array");
        }
        for (const json& entry : *it) {
          ScenarioConfig c = base;
          c.merge(config_from_json(entry));
          c.merge(flags);
          scenarios.push_back(c);
        }
      } else {
        base.merge(flags);
        scenarios.push_back(base);
      }
    } else {
      scenarios.push_back(flags);
    }
    if (scenarios.size() > 1) {
      for (const ScenarioConfig& c : scenarios) {
        if (!c.output) throw UsageError("every batch scenario needs an output path");
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<Outcome> outcomes(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      outcomes[i] = run_scenario(scenarios[i]);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, scenarios.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int code = kExitOk;
  for (const Outcome& o : outcomes) {
    out << o.stdout_text;
    err << o.stderr_text;
    code = std::max(code, o.code);
  }
  return code;
}

int cmd_adversary(const std::string& robogram_sel, std::size_t n, std::size_t horizon,
                  const std::optional<std::string>& output, std::optional<std::uint64_t> seed,
                  std::ostream& out, std::ostream& err) {
  std::optional<Robogram> robogram;
  try {
    if (n == 0) throw UsageError("--n must be at least 1");
    robogram = robogram_from_selector(robogram_sel);
    if (!seed) seed = default_seed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const ImpossibilityRun run = run_impossibility(*robogram, n, horizon, *seed);
    if (output) {
      std::ofstream file(*output);
      if (!file) throw std::runtime_error("cannot write " + *output);
      write_trace(file, run.trace);
    }
    out << report_json(run.report).dump(2) << "\n";
    if (!run.report.refutes_gathering()) {
      err << "adversary did not refute gathering";
      if (!run.report.invariance_ok) err << " (robogram is not permutation invariant)";
      err << "\n";
      return kExitFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    std::string where = e.round() ? " at round " + std::to_string(*e.round()) : "";
    err << "runtime error" << where << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
  }
  return kExitRuntime;
}

int cmd_check(const std::string& trace_path, const std::string& property,
              std::ostream& out, std::ostream& err) {
  Trace trace;
  std::optional<Robogram> robogram;
  std::optional<std::size_t> k;
  try {
    constexpr std::string_view kKfair = "kfair:";
    if (property.starts_with(kKfair)) {
      k = parse_u64(std::string_view(property).substr(kKfair.size()), "fairness bound");
    } else if (property != "will-gather" && property != "always-split") {
      throw UsageError("unknown property \"" + property + "\"");
    }
    std::ifstream in(trace_path);
    if (!in) throw UsageError("cannot open " + trace_path);
    trace = read_trace(in);
    robogram = robogram_from_selector(trace.robogram);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (const auto bad = find_replay_mismatch(*robogram, trace)) {
      err << "replay mismatch at round " << *bad << "\n";
      return kExitRuntime;
    }
  } catch (const std::exception& e) {
    err << "replay failed: " << e.what() << "\n";
    return kExitRuntime;
  }

  if (k) {
    const Verdict v = trace.horizon() == 0 ? Verdict::no_violation_up_to(0)
                                           : check_kfair(trace.actions(), *k);
    out << verdict_json(property, v).dump() << "\n";
    return v.is_violated() ? kExitFailed : kExitOk;
  }
  if (property == "will-gather") {
    const GatherVerdict v = check_will_gather(trace);
    out << verdict_json(property, v).dump() << "\n";
    return v.gathered() ? kExitOk : kExitFailed;
  }
  const Verdict v = check_always_split(trace);
  out << verdict_json(property, v).dump() << "\n";
  return v.is_violated() ? kExitFailed : kExitOk;
}

ordered_json scalar_list(const Position& p) {
  ordered_json out = ordered_json::object();
  for (std::size_t r = 0; r < p.size(); ++r) {
    out[p.universe().id(r).to_string()] = p.at_rank(r).to_string();
  }
  return out;
}

int cmd_invariance(const std::string& robogram_sel, std::size_t samples,
                   std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err) {
  std::optional<Robogram> robogram;
  try {
    if (samples == 0) throw UsageError("--samples must be at least 1");
    robogram = robogram_from_selector(robogram_sel);
    if (!seed) seed = default_seed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const InvarianceSampleResult result = sample_invariance(*robogram, samples, *seed);
    ordered_json report;
    report["robogram"] = robogram->name();
    report["samples"] = result.samples_run;
    report["seed"] = *seed;
    report["passed"] = result.passed();
    if (const auto& cx = result.counterexample) {
      ordered_json perm = ordered_json::object();
      for (const RobotId& id : cx->permutation.universe().ids()) {
        perm[id.to_string()] = cx->permutation.apply(id).to_string();
      }
      report["counterexample"] = {{"position", scalar_list(cx->position)},
                                  {"permutation", perm},
                                  {"result", cx->original.to_string()},
                                  {"permuted_result", cx->permuted.to_string()}};
    }
    out << report.dump(2) << "\n";
    return result.passed() ? kExitOk : kExitFailed;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Look-Compute-Move gathering simulator and adversary", "lcm"};
  app.require_subcommand(1);

  ScenarioConfig flags;
  std::optional<std::string> config_path;
  std::size_t jobs = 1;
  auto* simulate = app.add_subcommand("simulate", "Run a demon against a robogram and write the trace");
  simulate->add_option("--robogram", flags.robogram, "Robogram selector");
  simulate->add_option("--demon", flags.demon, "Demon selector");
  simulate->add_option("--n", flags.n, "Robots per pile");
  simulate->add_option("--init", flags.init,
                       "Initial position: bivalent:<a>:<b> or L0=<num/den>,...");
  simulate->add_option("--horizon", flags.horizon, "Number of rounds");
  simulate->add_option("--output", flags.output, "Trace file (default: standard output)");
  simulate->add_option("--config", config_path, "JSON scenario or batch config; flags win");
  simulate->add_option("--jobs", jobs, "Parallel scenarios for batch configs");

  std::string adv_robogram;
  std::size_t adv_n = 0;
  std::size_t adv_horizon = 0;
  std::optional<std::string> adv_output;
  std::optional<std::uint64_t> adv_seed;
  auto* adversary = app.add_subcommand("adversary", "Build the refuting demon and certify the run");
  adversary->add_option("--robogram", adv_robogram, "Robogram selector")->required();
  adversary->add_option("--n", adv_n, "Robots per pile")->required();
  adversary->add_option("--horizon", adv_horizon, "Number of rounds")->required();
  adversary->add_option("--output", adv_output, "Trace file");
  adversary->add_option("--seed", adv_seed, "Seed for the invariance pre-check");

  std::string check_trace;
  std::string check_property;
  auto* check = app.add_subcommand("check", "Replay a trace and check a property");
  check->add_option("--trace", check_trace, "Trace file")->required();
  check->add_option("--property", check_property,
                    "kfair:<k> | will-gather | always-split")->required();

  std::string inv_robogram;
  std::size_t inv_samples = 1000;
  std::optional<std::uint64_t> inv_seed;
  auto* invariance = app.add_subcommand("invariance", "Sample robogram permutation invariance");
  invariance->add_option("--robogram", inv_robogram, "Robogram selector")->required();
  invariance->add_option("--samples", inv_samples, "Number of samples");
  invariance->add_option("--seed", inv_seed, "Random seed (default: $LCM_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(flags, config_path, jobs, out, err);
    if (adversary->parsed()) {
      return cmd_adversary(adv_robogram, adv_n, adv_horizon, adv_output, adv_seed, out, err);
    }
    if (check->parsed()) return cmd_check(check_trace, check_property, out, err);
    if (invariance->parsed()) return cmd_invariance(inv_robogram, inv_samples, inv_seed, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace gathering::cli
