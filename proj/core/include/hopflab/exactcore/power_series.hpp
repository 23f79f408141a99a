#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopflab/exactcore/scalar.hpp"

namespace hopflab::exact {

/// Power series truncated at order N: coefficients c_0..c_N. Nothing past
/// the truncation order is ever read or produced.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::vector<Scalar> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
  Scalar& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

  /// Multiplicative inverse; requires c_0 != 0.
  PowerSeries inverse() const;

  /// Sum_k outer[k] * this^k; requires this->c_0 == 0.
  PowerSeries compose_into(const std::vector<Scalar>& outer) const;

  /// JSON array of rational strings, e.g. ["1","0","1/2"].
  std::string to_json() const;

 private:
  std::vector<Scalar> coeffs_;
};

/// Graded dimension series of the decorated planar forest algebra built on
/// an alphabet with series `alphabet`: (1 - sqrt(1 - 4 f)) / (2 f).
/// Throws DomainError when alphabet[0] != 0.
PowerSeries series_from_alphabet(const PowerSeries& alphabet, std::size_t order);

/// Inverse of series_from_alphabet: (f - 1) / f^2. Throws DomainError when
/// algebra[0] != 1.
PowerSeries series_to_alphabet(const PowerSeries& algebra, std::size_t order);

}  // namespace hopflab::exact
