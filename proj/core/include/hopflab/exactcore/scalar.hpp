#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hopflab::exact {

using BigInt = boost::multiprecision::mpz_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of literals
  Scalar(const BigInt& value) : value_(value) {}  // NOLINT
  Scalar(const BigInt& numerator, const BigInt& denominator);

  /// Parses `p/q` or `p` (optional sign, decimal digits).
  static Scalar parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const;
  int sign() const { return value_.sign(); }

  /// `p/q`, or `p` when q = 1.
  std::string str() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  using Rational = boost::multiprecision::mpq_rational;
  explicit Scalar(Rational value) : value_(std::move(value)) {}

  Rational value_;
};

}  // namespace hopflab::exact
