#include "hopflab/exactcore/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hopflab/error.hpp"

namespace hopflab::exact {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("invalid rational literal '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return negative ? BigInt(-value) : value;
}

}  // namespace

Scalar::Scalar(const BigInt& numerator, const BigInt& denominator) {
  if (denominator.is_zero()) {
    throw DomainError("rational with zero denominator");
  }
  value_ = Rational(numerator, denominator);
}

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Scalar(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den.is_zero()) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Scalar(num, den);
}

BigInt Scalar::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt Scalar::denominator() const { return boost::multiprecision::denominator(value_); }

bool Scalar::is_integer() const { return denominator() == 1; }

std::string Scalar::str() const {
  BigInt den = denominator();
  if (den == 1) {
    return numerator().str();
  }
  return numerator().str() + "/" + den.str();
}

Scalar& Scalar::operator+=(const Scalar& other) {
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(Rational(-value_)); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hopflab::exact
