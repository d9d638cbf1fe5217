#include "gathering/trace_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "gathering/error.hpp"

namespace gathering {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json scalar_map(const RobotUniverse& universe,
                        std::span<const Scalar> values) {
  ordered_json out = ordered_json::object();
  for (std::size_t r = 0; r < values.size(); ++r) {
    out[universe.id(r).to_string()] = values[r].to_string();
  }
  return out;
}

std::vector<Scalar> parse_scalar_map(const json& obj, const RobotUniverse& universe,
                                     const char* what) {
  if (!obj.is_object()) {
    throw TraceFormatError(std::string(what) + " is not an object");
  }
  if (obj.size() != universe.size()) {
    throw TraceFormatError(std::string(what) + " has " + std::to_string(obj.size()) +
                           " entries, expected " + std::to_string(universe.size()));
  }
  std::vector<Scalar> values(universe.size());
  std::vector<bool> seen(universe.size(), false);
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) {
      throw TraceFormatError(std::string(what) + "." + key + " is not a string");
    }
    try {
      const std::size_t rank = universe.rank(RobotId::parse(key));
      values[rank] = Scalar::parse(value.get<std::string>());
      seen[rank] = true;
    } catch (const InvalidArgument& e) {
      throw TraceFormatError(std::string(what) + ": " + e.what());
    }
  }
  for (bool s : seen) {
    if (!s) throw TraceFormatError(std::string(what) + " misses a robot");
  }
  return values;
}

const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw TraceFormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::string string_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_string()) throw TraceFormatError(std::string(name) + " is not a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_unsigned()) {
    throw TraceFormatError(std::string(name) + " is not a non-negative integer");
  }
  return v.get<std::size_t>();
}

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw TraceFormatError("line " + std::to_string(line_no) + " is not an object");
    return j;
  } catch (const json::parse_error& e) {
    throw TraceFormatError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

void write_trace(std::ostream& out, const Trace& t) {
  const RobotUniverse& universe = t.initial.universe();
  ordered_json header;
  header["robogram"] = t.robogram;
  header["demon"] = t.demon;
  header["n"] = universe.pile_size();
  header["p0"] = scalar_map(universe, t.initial.locations());
  out << header.dump() << '\n';
  for (const TraceRound& r : t.rounds) {
    ordered_json line;
    line["round"] = r.index;
    line["frames"] = scalar_map(universe, r.action.frames());
    line["post"] = scalar_map(universe, r.post.locations());
    out << line.dump() << '\n';
  }
}

std::string trace_to_string(const Trace& t) {
  std::ostringstream out;
  write_trace(out, t);
  return out.str();
}

Trace read_trace(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw TraceFormatError("empty trace file");
  const json header = parse_line(line, line_no);

  Trace t;
  t.robogram = string_field(header, "robogram");
  t.demon = string_field(header, "demon");
  const RobotUniverse universe(count_field(header, "n"));
  if (!universe.inhabited()) throw TraceFormatError("trace header has n = 0");
  t.initial = Position(universe, parse_scalar_map(field(header, "p0"), universe, "p0"));

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const json j = parse_line(line, line_no);
    const std::size_t index = count_field(j, "round");
    if (index != t.rounds.size()) {
      throw TraceFormatError("line " + std::to_string(line_no) + " has round " +
                             std::to_string(index) + ", expected " +
                             std::to_string(t.rounds.size()));
    }
    t.rounds.push_back(TraceRound{
        index, DemonicAction(universe, parse_scalar_map(field(j, "frames"), universe, "frames")),
        Position(universe, parse_scalar_map(field(j, "post"), universe, "post"))});
  }
  return t;
}

Trace trace_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_trace(in);
}

ordered_json verdict_json(const std::string& property, const Verdict& v) {
  ordered_json out;
  out["property"] = property;
  out["verdict"] = to_string(v.kind);
  if (v.kind == Verdict::Kind::Proven || v.kind == Verdict::Kind::Violated) {
    out["round"] = v.round;
  }
  out["horizon"] = v.horizon;
  return out;
}

ordered_json verdict_json(const std::string& property, const GatherVerdict& v) {
  ordered_json out;
  out["property"] = property;
  out["verdict"] = to_string(v.kind);
  if (v.gathered()) {
    out["round"] = v.round;
    out["point"] = v.point->to_string();
  }
  out["horizon"] = v.horizon;
  return out;
}

ordered_json report_json(const ImpossibilityReport& r) {
  ordered_json out;
  out["robogram"] = r.robogram;
  out["n"] = r.n;
  out["horizon"] = r.horizon;
  out["probe"] = {{"delta", r.probe.delta.to_string()},
                  {"branch", to_string(r.probe.branch)}};
  out["invariance_ok"] = r.invariance_ok;
  out["views_canonical"] = r.views_canonical;
  out["split"] = verdict_json("always-split", r.split);
  out["gather"] = verdict_json("will-gather", r.gather);
  out["kfair0"] = verdict_json("kfair:0", r.kfair0);
  out["kfair1"] = verdict_json("kfair:1", r.kfair1);
  ordered_json bivalence;
  bivalence["complete"] = r.bivalence.complete();
  bivalence["checked"] = r.bivalence.checked;
  if (r.bivalence.first_failure) bivalence["first_failure"] = *r.bivalence.first_failure;
  out["bivalence"] = bivalence;
  out["consistent"] = r.consistent();
  out["refutes_gathering"] = r.refutes_gathering();
  return out;
}

}  // namespace gathering
