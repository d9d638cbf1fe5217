#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gathering/adversary.hpp"
#include "gathering/execution.hpp"
#include "gathering/properties.hpp"
#include "gathering/verdict.hpp"

namespace gathering {

// Trace files are JSON Lines. The first line is the header
//   {"robogram": ..., "demon": ..., "n": n, "p0": {"L0": "num/den", ...}}
// and line i >= 1 describes round i - 1
//   {"round": i - 1, "frames": {id: "num/den", ...}, "post": {id: "num/den", ...}}
// Ids are written in rank order (L0..L(n-1), R0..R(n-1)).

void write_trace(std::ostream& out, const Trace& t);
[[nodiscard]] std::string trace_to_string(const Trace& t);

/// Throws TraceFormatError on malformed input: bad JSON, missing fields,
/// unknown or missing robot ids, non-canonical round numbering.
[[nodiscard]] Trace read_trace(std::istream& in);
[[nodiscard]] Trace trace_from_string(const std::string& text);

[[nodiscard]] nlohmann::ordered_json verdict_json(const std::string& property,
                                                  const Verdict& v);
[[nodiscard]] nlohmann::ordered_json verdict_json(const std::string& property,
                                                  const GatherVerdict& v);
[[nodiscard]] nlohmann::ordered_json report_json(const ImpossibilityReport& r);

}  // namespace gathering
