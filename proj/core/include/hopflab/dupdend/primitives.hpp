#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/exactcore/matrix.hpp"
#include "hopflab/hopf/ops.hpp"

namespace hopflab::dupdend {

using hopf::KeyOf;
using hopf::Side;
using exact::LinComb;

/// Basis of the elements of degree n killed by both split coproducts. The
/// vectors come from the reduced echelon form of the stacked split matrices
/// over the basis alg.basis(n): one per free column, first nonzero
/// coefficient 1.
template <class A>
std::vector<LinComb<KeyOf<A>>> prim_tot(const A& alg, int n) {
  using Key = KeyOf<A>;
  if (n < 1) throw DomainError("totally primitive elements live in positive degree");
  const auto basis = alg.basis(n);
  std::map<std::pair<int, std::pair<Key, Key>>, std::size_t> row_of;
  std::vector<exact::Matrix::Row> columns(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (Side side : {Side::Prec, Side::Succ}) {
      for (const auto& [t, c] : alg.delta(side, basis[j])) {
        auto [it, fresh] = row_of.try_emplace({side == Side::Prec ? 0 : 1, t}, row_of.size());
        columns[j].emplace_back(it->second, c);
      }
    }
  }
  exact::Matrix by_column(basis.size(), row_of.size());
  for (std::size_t j = 0; j < basis.size(); ++j) by_column.set_row(j, std::move(columns[j]));
  std::vector<LinComb<Key>> out;
  for (const auto& v : exact::kernel_basis(by_column.transpose())) {
    LinComb<Key> x;
    for (std::size_t i = 0; i < v.size(); ++i) x.add(basis[i], v[i]);
    out.push_back(std::move(x));
  }
  return out;
}

/// One application of a split coproduct to one tensor factor. Factors are
/// numbered from 0 (leftmost); the chosen factor is replaced by the two
/// factors of its split, so later slots shift right by one.
struct SplitStep {
  Side side;
  std::size_t slot = 0;
};

template <class K>
using TensorN = LinComb<std::vector<K>>;

template <class A>
TensorN<KeyOf<A>> apply_step(const A& alg, const TensorN<KeyOf<A>>& t, const SplitStep& step) {
  using Key = KeyOf<A>;
  TensorN<Key> out;
  for (const auto& [factors, c] : t) {
    if (step.slot >= factors.size()) throw DomainError("split slot out of range");
    for (const auto& [pair, d] : alg.delta(step.side, factors[step.slot])) {
      std::vector<Key> next;
      next.reserve(factors.size() + 1);
      next.insert(next.end(), factors.begin(), factors.begin() + static_cast<long>(step.slot));
      next.push_back(pair.first);
      next.push_back(pair.second);
      next.insert(next.end(), factors.begin() + static_cast<long>(step.slot) + 1, factors.end());
      out.add(next, c * d);
    }
  }
  return out;
}

/// Applies the steps left to right starting from x (a one-factor tensor).
template <class A>
TensorN<KeyOf<A>> iterated_coproduct(const A& alg, const std::vector<SplitStep>& steps, const LinComb<KeyOf<A>>& x) {
  using Key = KeyOf<A>;
  if (x.empty()) throw DomainError("iterated coproduct of the zero element");
  hopf::require_augmentation(alg, x);
  TensorN<Key> t;
  for (const auto& [k, c] : x) t.add(std::vector<Key>{k}, c);
  for (const auto& s : steps) t = apply_step(alg, t, s);
  return t;
}

/// Smallest k such that every k-step iterate of x vanishes; primitives in
/// both senses have deg_p = 1.
template <class A>
int deg_p(const A& alg, const LinComb<KeyOf<A>>& x) {
  using Key = KeyOf<A>;
  if (x.empty()) throw DomainError("deg_p of the zero element");
  hopf::require_augmentation(alg, x);
  TensorN<Key> start;
  for (const auto& [k, c] : x) start.add(std::vector<Key>{k}, c);
  std::vector<TensorN<Key>> level{start};
  for (int k = 1;; ++k) {
    std::vector<TensorN<Key>> next;
    for (const auto& t : level) {
      const std::size_t factors = t.begin()->first.size();
      for (Side side : {Side::Prec, Side::Succ}) {
        for (std::size_t slot = 0; slot < factors; ++slot) {
          auto r = apply_step(alg, t, SplitStep{side, slot});
          if (!r.empty() && std::find(next.begin(), next.end(), r) == next.end()) next.push_back(std::move(r));
        }
      }
    }
    if (next.empty()) return k;
    level = std::move(next);
  }
}

}  // namespace hopflab::dupdend
