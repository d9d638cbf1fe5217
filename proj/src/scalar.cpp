#include "gathering/scalar.hpp"

#include <utility>

#include "gathering/error.hpp"

namespace gathering {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(std::int64_t value) : value_(mpz_class(std::to_string(value))) {}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw InvalidArgument("expected rational \"num/den\", got \"" +
                          std::string(text) + "\"");
  }
  std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidArgument("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InvalidArgument("zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

std::string Scalar::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw InvalidArgument("reciprocal of zero");
  return Scalar(mpq_class(1) / value_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

}  // namespace gathering
