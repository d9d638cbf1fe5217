#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gathering {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Every location, frame factor and destination in the simulator is a Scalar.
/// Equality and ordering are exact; there is no rounding anywhere.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t numerator, std::int64_t denominator);
  explicit Scalar(mpq_class value);

  /// Parses the canonical "num/den" form. The denominator must be a positive
  /// integer; the result is reduced. Throws InvalidArgument on anything else.
  static Scalar parse(std::string_view text);

  /// Canonical "num/den" string, integers as "5/1".
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// Throws InvalidArgument when *this is zero.
  [[nodiscard]] Scalar reciprocal() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws InvalidArgument on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  mpq_class value_{0};
};

}  // namespace gathering
