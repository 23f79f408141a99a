#pragma once

#include <tuple>
#include <utility>

#include "hopflab/error.hpp"
#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/hopf/algebras.hpp"

// Linear extensions of the basis operations of an algebra type A. A must
// provide Key, unit(), is_unit(), product(), coproduct(); the Dup-Dend
// helpers additionally need delta() and nwarrow().

namespace hopflab::hopf {

template <class A>
using KeyOf = typename A::Key;

template <class A>
LinComb<KeyOf<A>> unit_element(const A& alg) {
  return LinComb<KeyOf<A>>(alg.unit());
}

template <class A>
LinComb<KeyOf<A>> mul(const A& alg, const LinComb<KeyOf<A>>& x, const LinComb<KeyOf<A>>& y) {
  return exact::bilinear_map(x, y, [&](const auto& a, const auto& b) { return alg.product(a, b); });
}

template <class A>
Tensor<KeyOf<A>> comul(const A& alg, const LinComb<KeyOf<A>>& x) {
  return exact::linear_map(x, [&](const auto& k) { return alg.coproduct(k); });
}

template <class A>
Scalar counit(const A& alg, const LinComb<KeyOf<A>>& x) {
  return x.coefficient(alg.unit());
}

/// Coproduct with the two unit terms x (x) 1 and 1 (x) x removed.
template <class A>
Tensor<KeyOf<A>> reduced_coproduct(const A& alg, const KeyOf<A>& k) {
  Tensor<KeyOf<A>> out;
  for (const auto& [t, c] : alg.coproduct(k)) {
    if (!alg.is_unit(t.first) && !alg.is_unit(t.second)) out.add(t, c);
  }
  return out;
}

template <class A>
Tensor<KeyOf<A>> reduced_comul(const A& alg, const LinComb<KeyOf<A>>& x) {
  return exact::linear_map(x, [&](const auto& k) { return reduced_coproduct(alg, k); });
}

template <class A>
void require_augmentation(const A& alg, const LinComb<KeyOf<A>>& x) {
  if (x.contains(alg.unit())) throw DomainError("operation is defined on the augmentation ideal only");
}

template <class A>
Tensor<KeyOf<A>> delta(const A& alg, Side side, const LinComb<KeyOf<A>>& x) {
  require_augmentation(alg, x);
  return exact::linear_map(x, [&](const auto& k) { return alg.delta(side, k); });
}

/// The full reduced split: delta(Prec) + delta(Succ).
template <class A>
Tensor<KeyOf<A>> delta_sum(const A& alg, const KeyOf<A>& k) {
  return alg.delta(Side::Prec, k) + alg.delta(Side::Succ, k);
}

template <class A>
LinComb<KeyOf<A>> nwarrow(const A& alg, const LinComb<KeyOf<A>>& x, const LinComb<KeyOf<A>>& y) {
  require_augmentation(alg, x);
  require_augmentation(alg, y);
  return exact::bilinear_map(x, y, [&](const auto& a, const auto& b) { return alg.nwarrow(a, b); });
}

/// Sum over terms a1 (x) a2 of s and b1 (x) b2 of t of
/// left(a1, b1) (x) right(a2, b2).
template <class K, class L, class R>
Tensor<K> combine(const Tensor<K>& s, const Tensor<K>& t, L&& left, R&& right) {
  Tensor<K> out;
  for (const auto& [a, ca] : s) {
    for (const auto& [b, cb] : t) {
      const auto l = left(a.first, b.first);
      if (l.empty()) continue;
      const auto r = right(a.second, b.second);
      out.axpy(ca * cb, exact::tensor(l, r));
    }
  }
  return out;
}

/// Δ(x)Δ(y)-style product of two tensors, factor by factor.
template <class A>
Tensor<KeyOf<A>> mul_tensor(const A& alg, const Tensor<KeyOf<A>>& s, const Tensor<KeyOf<A>>& t) {
  auto p = [&](const auto& a, const auto& b) { return alg.product(a, b); };
  return combine(s, t, p, p);
}

/// (f (x) id)(t) for f : K -> Tensor<K>.
template <class K, class F>
Tensor3<K> apply_left(const Tensor<K>& t, F&& f) {
  Tensor3<K> out;
  for (const auto& [k, c] : t) {
    for (const auto& [p, d] : f(k.first)) out.add({p.first, p.second, k.second}, c * d);
  }
  return out;
}

/// (id (x) f)(t) for f : K -> Tensor<K>.
template <class K, class F>
Tensor3<K> apply_right(const Tensor<K>& t, F&& f) {
  Tensor3<K> out;
  for (const auto& [k, c] : t) {
    for (const auto& [p, d] : f(k.second)) out.add({k.first, p.first, p.second}, c * d);
  }
  return out;
}

/// (f (x) g)(t) for linear maps given on basis keys.
template <class K, class K2, class F, class G>
Tensor<K2> tensor_map(const Tensor<K>& t, F&& f, G&& g) {
  Tensor<K2> out;
  for (const auto& [k, c] : t) out.axpy(c, exact::tensor(f(k.first), g(k.second)));
  return out;
}

}  // namespace hopflab::hopf
