#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace gathering {

/// Outcome of checking a property on a finite trace prefix.
///
/// Inductive properties can be Proven on a prefix; coinductive ones can only
/// be refuted (Violated) or left unrefuted (NoViolationUpTo). Unknown means an
/// inductive derivation neither closed nor failed before the prefix ended.
struct Verdict {
  enum class Kind { Proven, Violated, NoViolationUpTo, Unknown };

  Kind kind{Kind::Unknown};
  /// Round of the proof or the earliest violation. Meaningful for Proven and
  /// Violated.
  std::size_t round{0};
  /// Length of the checked prefix.
  std::size_t horizon{0};

  static Verdict proven(std::size_t round, std::size_t horizon) {
    return {Kind::Proven, round, horizon};
  }
  static Verdict violated(std::size_t round, std::size_t horizon) {
    return {Kind::Violated, round, horizon};
  }
  static Verdict no_violation_up_to(std::size_t horizon) {
    return {Kind::NoViolationUpTo, 0, horizon};
  }
  static Verdict unknown(std::size_t horizon) { return {Kind::Unknown, 0, horizon}; }

  [[nodiscard]] bool is_violated() const { return kind == Kind::Violated; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

[[nodiscard]] std::string_view to_string(Verdict::Kind kind);

}  // namespace gathering
