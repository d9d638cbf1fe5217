#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gathering {

/// Base of every exception thrown by the library. Errors raised while
/// executing a demon carry the index of the round that failed.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}

  [[nodiscard]] std::optional<std::size_t> round() const { return round_; }
  void set_round(std::size_t round) { round_ = round; }

 private:
  std::optional<std::size_t> round_;
};

/// Malformed arguments: bad selector strings, unparsable rationals,
/// zero similarity factors, out-of-range robot ids.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A robogram's destination is not a rational number.
class NonRepresentableDestination : public Error {
 public:
  using Error::Error;
};

/// A full-activation policy returned 0 for some robot.
class ZeroFactorFromPolicy : public Error {
 public:
  using Error::Error;
};

/// The adversary was asked to start from a position that is not bivalent.
class DegenerateInitial : public Error {
 public:
  using Error::Error;
};

/// Operation requires at least one robot per pile.
class EmptyUniverse : public Error {
 public:
  using Error::Error;
};

/// A trace file could not be parsed.
class TraceFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gathering
