#include "hopflab/exactcore/power_series.hpp"

#include <algorithm>

#include "hopflab/error.hpp"

namespace hopflab::exact {

PowerSeries::PowerSeries(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(order + 1) {
  for (std::size_t i = 0; i <= order && i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  return PowerSeries(std::vector<Scalar>(coeffs_.begin(),
                                         coeffs_.begin() + static_cast<long>(std::min(order, this->order()) + 1)),
                     order);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw DomainError("series with zero constant term is not invertible");
  PowerSeries inv(order());
  Scalar c0_inv = Scalar(1) / coeffs_[0];
  inv[0] = c0_inv;
  for (std::size_t n = 1; n <= order(); ++n) {
    Scalar acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!coeffs_[k].is_zero()) acc += coeffs_[k] * inv[n - k];
    }
    inv[n] = -acc * c0_inv;
  }
  return inv;
}

PowerSeries PowerSeries::compose_into(const std::vector<Scalar>& outer) const {
  if (!coeffs_[0].is_zero()) throw DomainError("inner series of a composition must have zero constant term");
  PowerSeries acc(order());
  for (std::size_t j = std::min(outer.size(), order() + 1); j-- > 0;) {
    acc = acc * *this;
    acc[0] += outer[j];
  }
  return acc;
}

std::string PowerSeries::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += "\"" + coeffs_[i].str() + "\"";
  }
  return out + "]";
}

PowerSeries series_from_alphabet(const PowerSeries& alphabet, std::size_t order) {
  if (!alphabet[0].is_zero()) throw DomainError("alphabet series must have zero constant term");
  // (1 - sqrt(1 - 4u)) / (2u) = sum_j C(2j+2, j+1) / (2 (2j+1)) u^j, read off
  // the binomial expansion sqrt(1 - 4u) = -sum_k C(2k, k) / (2k - 1) u^k.
  std::vector<Scalar> outer;
  outer.reserve(order + 1);
  BigInt central = 2;  // C(2, 1)
  for (std::size_t j = 0; j <= order; ++j) {
    outer.push_back(Scalar(central, BigInt(2 * (2 * j + 1))));
    // C(2m+2, m+1) = C(2m, m) * (2m+1)(2m+2) / (m+1)^2 with m = j+1.
    std::size_t m = j + 1;
    central = central * (2 * m + 1) * (2 * m + 2) / ((m + 1) * (m + 1));
  }
  return alphabet.truncated(order).compose_into(outer);
}

PowerSeries series_to_alphabet(const PowerSeries& algebra, std::size_t order) {
  if (algebra[0] != Scalar(1)) throw DomainError("algebra series must have constant term 1");
  PowerSeries f = algebra.truncated(order);
  PowerSeries one(order);
  one[0] = Scalar(1);
  PowerSeries inv = f.inverse();
  return (f - one) * inv * inv;
}

}  // namespace hopflab::exact
