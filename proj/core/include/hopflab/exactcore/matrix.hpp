#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/exactcore/scalar.hpp"

namespace hopflab::exact {

/// Rectangular matrix of Scalars with association-based (sparse) rows.
/// Each row holds its nonzero entries sorted by column.
class Matrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;
  using Row = std::vector<Entry>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> dense);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& dense, std::size_t cols = 0);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  const Row& row(std::size_t r) const { return rows_[r]; }
  /// Replaces a row; entries may be unsorted and may contain zeros or
  /// repeated columns (summed).
  void set_row(std::size_t r, Row entries);
  void append_row(Row entries);
  void resize_cols(std::size_t cols);

  Matrix transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::size_t nonzeros() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  static Row normalize(Row entries);

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const Matrix& m);

/// Basis of the right kernel. One vector per non-pivot column, in column
/// order; each vector has its first nonzero coordinate scaled to 1.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rank of a vector family (as rows).
std::size_t rank_of_rows(const std::vector<std::vector<Scalar>>& vectors, std::size_t dim);

/// True when the two families span the same subspace of Q^dim.
bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
               std::size_t dim);

}  // namespace hopflab::exact
