#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/exactcore/matrix.hpp"

namespace hopflab::exact {

/// Degreewise linear map between graded spaces with enumerated bases. The
/// block of degree n is a matrix whose columns are indexed by the source
/// basis of degree n and whose rows by the target basis of degree n.
template <class Src, class Tgt>
class GradedMap {
 public:
  struct Block {
    std::vector<Src> source;
    std::vector<Tgt> target;
    Matrix matrix;
  };

  /// Installs the degree-n block. The matrix must be target.size() x
  /// source.size().
  void set_block(int degree, std::vector<Src> source, std::vector<Tgt> target, Matrix matrix) {
    if (matrix.rows() != target.size() || matrix.cols() != source.size()) {
      throw DomainError("graded map block has the wrong shape");
    }
    for (std::size_t i = 0; i < source.size(); ++i) source_index_[source[i]] = {degree, i};
    std::map<Tgt, std::size_t> tindex;
    for (std::size_t i = 0; i < target.size(); ++i) tindex[target[i]] = i;
    target_index_[degree] = std::move(tindex);
    blocks_[degree] = Block{std::move(source), std::move(target), std::move(matrix)};
  }

  /// Builds the block from images of basis elements. Image terms outside
  /// `target` raise DomainError.
  template <class F>
  void set_block_from(int degree, std::vector<Src> source, std::vector<Tgt> target, F&& image) {
    std::map<Tgt, std::size_t> tindex;
    for (std::size_t i = 0; i < target.size(); ++i) tindex[target[i]] = i;
    Matrix columns(source.size(), target.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
      Matrix::Row row;
      for (const auto& [k, c] : image(source[j])) {
        auto it = tindex.find(k);
        if (it == tindex.end()) throw DomainError("image term outside the target basis: " + format_key(k));
        row.emplace_back(it->second, c);
      }
      columns.set_row(j, std::move(row));
    }
    set_block(degree, std::move(source), std::move(target), columns.transpose());
  }

  bool has_degree(int degree) const { return blocks_.count(degree) != 0; }
  const Block& block(int degree) const {
    auto it = blocks_.find(degree);
    if (it == blocks_.end()) throw DomainError("graded map has no block in degree " + std::to_string(degree));
    return it->second;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [d, b] : blocks_) out.push_back(d);
    return out;
  }
  int max_degree() const { return blocks_.empty() ? 0 : blocks_.rbegin()->first; }

  bool covers(const Src& key) const { return source_index_.count(key) != 0; }

  LinComb<Tgt> apply(const Src& key) const {
    auto it = source_index_.find(key);
    if (it == source_index_.end()) throw DomainError("key outside the graded map's source: " + format_key(key));
    const auto& [degree, col] = it->second;
    const Block& b = blocks_.at(degree);
    LinComb<Tgt> out;
    for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
      Scalar v = b.matrix.at(r, col);
      if (!v.is_zero()) out.add(b.target[r], v);
    }
    return out;
  }

  LinComb<Tgt> apply(const LinComb<Src>& x) const {
    return linear_map(x, [this](const Src& k) { return apply(k); });
  }

  /// Degreewise inverse; nullopt when some block is singular or not square.
  std::optional<GradedMap<Tgt, Src>> inverse() const {
    GradedMap<Tgt, Src> inv;
    for (const auto& [d, b] : blocks_) {
      if (b.source.size() != b.target.size()) return std::nullopt;
      auto m = exact::inverse(b.matrix);
      if (!m) return std::nullopt;
      inv.set_block(d, b.target, b.source, std::move(*m));
    }
    return inv;
  }

  /// True when every block is square and invertible.
  bool invertible() const {
    for (const auto& [d, b] : blocks_) {
      if (b.source.size() != b.target.size() || rank(b.matrix) != b.source.size()) return false;
    }
    return true;
  }

  /// Row index of a target key in its degree block.
  std::optional<std::size_t> target_position(int degree, const Tgt& key) const {
    auto it = target_index_.find(degree);
    if (it == target_index_.end()) return std::nullopt;
    auto jt = it->second.find(key);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  }

 private:
  std::map<int, Block> blocks_;
  std::map<Src, std::pair<int, std::size_t>> source_index_;
  std::map<int, std::map<Tgt, std::size_t>> target_index_;
};

/// g o f, block by block, expressed in f's source basis and g's target basis.
template <class A, class B, class C>
GradedMap<A, C> compose(const GradedMap<B, C>& g, const GradedMap<A, B>& f) {
  GradedMap<A, C> out;
  for (int d : f.degrees()) {
    const auto& fb = f.block(d);
    const auto& gb = g.block(d);
    out.set_block_from(d, fb.source, gb.target, [&](const A& k) { return g.apply(f.apply(k)); });
  }
  return out;
}

}  // namespace hopflab::exact
