#include "hopflab/exactcore/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "hopflab/error.hpp"

namespace hopflab::exact {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> dense) {
  for (const auto& r : dense) cols_ = std::max(cols_, r.size());
  for (const auto& r : dense) {
    Row row;
    std::size_t c = 0;
    for (const auto& v : r) {
      if (!v.is_zero()) row.emplace_back(c, v);
      ++c;
    }
    rows_.push_back(std::move(row));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& dense, std::size_t cols) {
  Matrix m;
  m.cols_ = cols;
  for (const auto& r : dense) m.cols_ = std::max(m.cols_, r.size());
  for (const auto& r : dense) {
    Row row;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (!r[c].is_zero()) row.emplace_back(c, r[c]);
    }
    m.rows_.push_back(std::move(row));
  }
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Scalar(0);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (c >= cols_) throw std::out_of_range("matrix column out of range");
  Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  bool present = it != row.end() && it->first == c;
  if (value.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    row.insert(it, {c, value});
  }
}

Matrix::Row Matrix::normalize(Row entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Row out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(std::move(e));
    }
    if (out.back().second.is_zero()) out.pop_back();
  }
  return out;
}

void Matrix::set_row(std::size_t r, Row entries) {
  Row row = normalize(std::move(entries));
  if (!row.empty() && row.back().first >= cols_) throw std::out_of_range("matrix column out of range");
  rows_.at(r) = std::move(row);
}

void Matrix::append_row(Row entries) {
  rows_.emplace_back();
  set_row(rows_.size() - 1, std::move(entries));
}

void Matrix::resize_cols(std::size_t cols) {
  for (const auto& row : rows_) {
    if (!row.empty() && row.back().first >= cols) throw std::out_of_range("cannot shrink over nonzero entries");
  }
  cols_ = cols;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  }
  return t;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> out(rows_.size(), std::vector<Scalar>(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) out[r][c] = v;
  }
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DomainError("dimension mismatch in matrix-vector product");
  std::vector<Scalar> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, x] : rows_[r]) {
      if (!v[c].is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows()) throw DomainError("dimension mismatch in matrix product");
  Matrix out(a.rows(), b.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Matrix::Row acc;
    for (const auto& [k, x] : a.rows_[r]) {
      for (const auto& [c, y] : b.rows_[k]) acc.emplace_back(c, x * y);
    }
    out.rows_[r] = Matrix::normalize(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan elimination.
//
// Rows are scaled to integers, then eliminated with Bareiss updates
//   row_i <- (pivot * row_i - a_i * row_pivot) / previous_pivot,
// which keep every entry an exact minor of the input. Rows whose entry in
// the pivot column is zero would only be rescaled by pivot/previous; that
// rescaling is deferred and applied in one step when the row is next
// touched (row * d_now / d_then is exact because every intermediate is).
//
// The elimination first runs on checked 64-bit integers and restarts on
// GMP integers if any operation overflows.

namespace {

struct Overflow {};

struct Int64Ops {
  using T = std::int64_t;
  static T from_big(const BigInt& v) {
    if (v > std::numeric_limits<T>::max() || v < std::numeric_limits<T>::min()) throw Overflow{};
    return static_cast<T>(v);
  }
  static BigInt to_big(T v) { return BigInt(v); }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T divexact(T a, T b) {
    if (b == -1) {
      if (a == std::numeric_limits<T>::min()) throw Overflow{};
      return -a;
    }
    if (a % b != 0) throw std::logic_error("inexact fraction-free division");
    return a / b;
  }
  static bool is_zero(T a) { return a == 0; }
};

struct BigOps {
  using T = BigInt;
  static T from_big(const BigInt& v) { return v; }
  static BigInt to_big(const T& v) { return v; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T divexact(const T& a, const T& b) {
    T q;
    mpz_divexact(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
  }
  static bool is_zero(const T& a) { return a.is_zero(); }
};

// Row-reduced echelon data over the rationals.
struct Rref {
  std::vector<std::size_t> pivot_cols;
  std::vector<Matrix::Row> rows;  // one per pivot, pivot entry 1, zeros in other pivot columns
};

// Integer content of the rows: each row multiplied by the lcm of its
// denominators.
std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> integer_rows(const Matrix& m) {
  std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    BigInt l = 1;
    for (const auto& e : row) l = boost::multiprecision::lcm(l, e.second.denominator());
    std::vector<std::pair<std::uint32_t, BigInt>> ir;
    ir.reserve(row.size());
    for (const auto& [c, v] : row) {
      ir.emplace_back(static_cast<std::uint32_t>(c), v.numerator() * (l / v.denominator()));
    }
    out.push_back(std::move(ir));
  }
  return out;
}

template <class Ops>
Rref eliminate(const std::vector<std::vector<std::pair<std::uint32_t, BigInt>>>& input, std::size_t cols,
               bool jordan) {
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  std::vector<Row> rows;
  rows.reserve(input.size());
  for (const auto& ir : input) {
    Row row;
    row.reserve(ir.size());
    for (const auto& [c, v] : ir) row.emplace_back(c, Ops::from_big(v));
    rows.push_back(std::move(row));
  }

  std::vector<T> divisor{T(1)};               // divisor[s]: Bareiss divisor after s pivots
  std::vector<std::size_t> stamp(rows.size(), 0);  // step at which each row is current
  std::vector<std::size_t> pending;           // non-pivot rows, in input order
  pending.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) pending.push_back(i);
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;

  auto find = [](const Row& row, std::uint32_t c) -> const T* {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };
  auto refresh = [&](std::size_t i) {
    std::size_t now = divisor.size() - 1;
    if (stamp[i] == now) return;
    const T& num = divisor[now];
    const T& den = divisor[stamp[i]];
    if (num != den) {
      for (auto& e : rows[i]) e.second = Ops::divexact(Ops::mul(e.second, num), den);
    }
    stamp[i] = now;
  };

  for (std::uint32_t c = 0; c < cols && !pending.empty(); ++c) {
    auto pit = std::find_if(pending.begin(), pending.end(),
                            [&](std::size_t i) { return find(rows[i], c) != nullptr; });
    if (pit == pending.end()) continue;
    std::size_t p = *pit;
    pending.erase(pit);
    refresh(p);
    const T piv = *find(rows[p], c);
    const T prev = divisor.back();
    const Row& prow = rows[p];

    auto update = [&](std::size_t i) {
      const T* ap = find(rows[i], c);
      if (!ap) return;
      refresh(i);
      const T a = *find(rows[i], c);
      const Row& row = rows[i];
      Row merged;
      merged.reserve(row.size() + prow.size());
      std::size_t x = 0, y = 0;
      while (x < row.size() || y < prow.size()) {
        std::uint32_t col;
        T val;
        if (y == prow.size() || (x < row.size() && row[x].first < prow[y].first)) {
          col = row[x].first;
          val = Ops::mul(piv, row[x].second);
          ++x;
        } else if (x == row.size() || prow[y].first < row[x].first) {
          col = prow[y].first;
          val = Ops::sub(T(0), Ops::mul(a, prow[y].second));
          ++y;
        } else {
          col = row[x].first;
          val = Ops::sub(Ops::mul(piv, row[x].second), Ops::mul(a, prow[y].second));
          ++x;
          ++y;
        }
        if (!Ops::is_zero(val)) merged.emplace_back(col, Ops::divexact(val, prev));
      }
      rows[i] = std::move(merged);
      stamp[i] = divisor.size();  // current as of the divisor pushed below
    };

    for (std::size_t i : pending) update(i);
    if (jordan) {
      for (std::size_t i : pivot_rows) update(i);
    }
    divisor.push_back(piv);
    stamp[p] = divisor.size() - 1;
    pivot_rows.push_back(p);
    pivot_cols.push_back(c);
    std::erase_if(pending, [&](std::size_t i) { return rows[i].empty(); });
  }

  Rref out;
  out.pivot_cols = pivot_cols;
  out.rows.reserve(pivot_rows.size());
  for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
    std::size_t i = pivot_rows[k];
    const T* pv = find(rows[i], static_cast<std::uint32_t>(pivot_cols[k]));
    Scalar d(Ops::to_big(*pv));
    Matrix::Row row;
    row.reserve(rows[i].size());
    for (const auto& [col, v] : rows[i]) row.emplace_back(col, Scalar(Ops::to_big(v)) / d);
    out.rows.push_back(std::move(row));
  }
  return out;
}

Rref reduce(const Matrix& m, bool jordan) {
  auto input = integer_rows(m);
  try {
    return eliminate<Int64Ops>(input, m.cols(), jordan);
  } catch (const Overflow&) {
    return eliminate<BigOps>(input, m.cols(), jordan);
  }
}

}  // namespace

std::size_t rank(const Matrix& m) { return reduce(m, false).pivot_cols.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  Rref rref = reduce(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;

  // Column f of the reduced rows, for each free column f.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> free_entries(m.cols());
  for (std::size_t k = 0; k < rref.rows.size(); ++k) {
    for (const auto& [c, v] : rref.rows[k]) {
      if (!is_pivot[c]) free_entries[c].emplace_back(rref.pivot_cols[k], -v);
    }
  }

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (const auto& [c, x] : free_entries[f]) v[c] = x;
    auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (*first != Scalar(1)) {
      Scalar inv = Scalar(1) / *first;
      for (auto& s : v) {
        if (!s.is_zero()) s *= inv;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    Matrix::Row row = m.row(r);
    row.emplace_back(n + r, Scalar(1));
    augmented.set_row(r, std::move(row));
  }
  Rref rref = reduce(augmented, true);
  if (rref.pivot_cols.size() < n || rref.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix::Row row;
    for (const auto& [c, v] : rref.rows[k]) {
      if (c >= n) row.emplace_back(c - n, v);
    }
    inv.set_row(rref.pivot_cols[k], std::move(row));
  }
  return inv;
}

std::size_t rank_of_rows(const std::vector<std::vector<Scalar>>& vectors, std::size_t dim) {
  return rank(Matrix::from_dense(vectors, dim));
}

bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
               std::size_t dim) {
  std::size_t ra = rank_of_rows(a, dim);
  std::size_t rb = rank_of_rows(b, dim);
  if (ra != rb) return false;
  std::vector<std::vector<Scalar>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank_of_rows(both, dim) == ra;
}

}  // namespace hopflab::exact
