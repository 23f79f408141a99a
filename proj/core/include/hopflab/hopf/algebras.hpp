#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/forests/ordered.hpp"
#include "hopflab/forests/planar.hpp"
#include "hopflab/forests/rooted.hpp"

namespace hopflab::hopf {

using exact::LinComb;
using exact::Scalar;
using exact::Tensor;
using exact::Tensor3;

/// The two halves of a split coproduct: Prec is the left half (written with
/// a "precedes" sign), Succ the right half.
enum class Side { Prec, Succ };

std::string to_string(Side s);

/// Connes-Kreimer algebra of rooted forests: disjoint union, coproduct
/// over admissible cuts. No split coproduct and no grafting product.
class CKAlgebra {
 public:
  using Key = forests::RootedForest;
  static constexpr bool has_dupdend = false;

  std::string name() const { return "ck"; }
  Key unit() const { return {}; }
  bool is_unit(const Key& k) const { return k.empty(); }
  int degree(const Key& k) const { return forests::degree(k); }
  std::vector<Key> basis(int n) const { return forests::enumerate_rooted(n); }
  Key parse(std::string_view text) const { return forests::parse_rooted(text); }

  LinComb<Key> product(const Key& a, const Key& b) const;
  Tensor<Key> coproduct(const Key& k) const;
};

/// Decorated planar forests: concatenation, coproduct over admissible cuts
/// with induced planar order; split by the position of the rightmost leaf,
/// grafting on the rightmost leaf.
class PlanarAlgebra {
 public:
  using Key = forests::PlanarForest;
  static constexpr bool has_dupdend = true;

  explicit PlanarAlgebra(forests::GradedAlphabet alphabet = forests::GradedAlphabet::undecorated())
      : alphabet_(std::move(alphabet)) {}

  std::string name() const { return "hp"; }
  const forests::GradedAlphabet& alphabet() const { return alphabet_; }
  Key unit() const { return {}; }
  bool is_unit(const Key& k) const { return k.empty(); }
  int degree(const Key& k) const { return forests::degree(k); }
  std::vector<Key> basis(int n) const { return forests::enumerate_planar(n, alphabet_); }
  Key parse(std::string_view text) const { return forests::parse_planar(text, &alphabet_); }

  LinComb<Key> product(const Key& a, const Key& b) const;
  Tensor<Key> coproduct(const Key& k) const;
  /// Nontrivial cuts with the rightmost leaf in Lea (Prec) or in Roo
  /// (Succ). Throws DomainError on the unit.
  Tensor<Key> delta(Side side, const Key& k) const;
  /// Grafting on the rightmost leaf. Throws DomainError on the unit.
  LinComb<Key> nwarrow(const Key& a, const Key& b) const;

 private:
  forests::GradedAlphabet alphabet_;
};

/// Ordered forests with shifted concatenation; with heap_only set the
/// carrier is the heap-ordered subalgebra and rejects other inputs.
class OrderedAlgebra {
 public:
  using Key = forests::OrderedForest;
  static constexpr bool has_dupdend = true;

  explicit OrderedAlgebra(bool heap_only = false) : heap_only_(heap_only) {}

  std::string name() const { return heap_only_ ? "hho" : "ho"; }
  bool heap_only() const { return heap_only_; }
  Key unit() const { return {}; }
  bool is_unit(const Key& k) const { return k.empty(); }
  int degree(const Key& k) const { return k.size(); }
  std::vector<Key> basis(int n) const;
  Key parse(std::string_view text) const;

  LinComb<Key> product(const Key& a, const Key& b) const;
  Tensor<Key> coproduct(const Key& k) const;
  /// Nontrivial cuts with the greatest vertex in Lea (Prec) or Roo (Succ).
  Tensor<Key> delta(Side side, const Key& k) const;
  /// Grafting on the greatest vertex.
  LinComb<Key> nwarrow(const Key& a, const Key& b) const;

 private:
  void check(const Key& k) const;
  bool heap_only_;
};

/// Which flag of a grafting decides the half of the dual product.
enum class SplitRule {
  LastRoot,      // the last root of the result comes from the left factor
  RightmostLeaf  // the rightmost leaf of the result comes from the left factor
};

/// Product of the dual basis: sum over all graftings of f on g.
LinComb<forests::PlanarForest> dual_product(const forests::PlanarForest& f, const forests::PlanarForest& g);

/// Half of the dual product: graftings whose flag (per `rule`) says the
/// left factor (Prec) or the right factor (Succ) owns the distinguished
/// position. Throws DomainError on empty input.
LinComb<forests::PlanarForest> dual_dendriform(Side side, const forests::PlanarForest& f,
                                               const forests::PlanarForest& g,
                                               SplitRule rule = SplitRule::LastRoot);

}  // namespace hopflab::hopf
