#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/hopf/laws.hpp"

// Identity checks for the two-product / split-coproduct structure: the
// duplicial axioms, the dendriform coalgebra axioms and the compatibilities
// between them. Sweedler sums with no terms are zero; split coproducts of
// degree-1 elements vanish.

namespace hopflab::dupdend {

using hopf::KeyOf;
using hopf::LawReport;
using hopf::Side;
using exact::LinComb;
using exact::Tensor;
using exact::Tensor3;

/// (xy)z = x(yz), (x<-y)<-z = x<-(y<-z), (xy)<-z = x(y<-z) on basis
/// triples of total degree <= n.
template <class A>
std::vector<LawReport> check_duplicial(const A& alg, int n, unsigned jobs = 1) {
  using L = LinComb<KeyOf<A>>;
  const auto triples = hopf::triples_up_to(hopf::bases_up_to(alg, n), n);
  auto assoc = hopf::run_law("e1-product-associative", n, triples, jobs,
                             [&](const auto& t) -> std::optional<std::string> {
                               const auto& [a, b, c] = t;
                               if (hopf::mul(alg, alg.product(a, b), L(c)) == hopf::mul(alg, L(a), alg.product(b, c)))
                                 return std::nullopt;
                               return "(xy)z != x(yz) at " + hopf::describe(t);
                             });
  auto graft = hopf::run_law("e1-nwarrow-associative", n, triples, jobs,
                             [&](const auto& t) -> std::optional<std::string> {
                               const auto& [a, b, c] = t;
                               if (hopf::nwarrow(alg, alg.nwarrow(a, b), L(c)) ==
                                   hopf::nwarrow(alg, L(a), alg.nwarrow(b, c)))
                                 return std::nullopt;
                               return "(x<-y)<-z != x<-(y<-z) at " + hopf::describe(t);
                             });
  auto mixed = hopf::run_law("e1-mixed", n, triples, jobs, [&](const auto& t) -> std::optional<std::string> {
    const auto& [a, b, c] = t;
    if (hopf::nwarrow(alg, alg.product(a, b), L(c)) == hopf::mul(alg, L(a), alg.nwarrow(b, c))) return std::nullopt;
    return "(xy)<-z != x(y<-z) at " + hopf::describe(t);
  });
  return {assoc, graft, mixed};
}

/// The three dendriform coalgebra axioms on basis keys of degree <= n.
template <class A>
std::vector<LawReport> check_dendriform_coalgebra(const A& alg, int n, unsigned jobs = 1) {
  const auto keys = hopf::keys_up_to(hopf::bases_up_to(alg, n), n);
  auto prec = [&](const auto& k) { return alg.delta(Side::Prec, k); };
  auto succ = [&](const auto& k) { return alg.delta(Side::Succ, k); };
  auto full = [&](const auto& k) { return hopf::delta_sum(alg, k); };
  auto first = hopf::run_law("e2-prec-prec", n, keys, jobs, [&](const auto& k) -> std::optional<std::string> {
    const auto d = prec(k);
    if (hopf::apply_left(d, prec) == hopf::apply_right(d, full)) return std::nullopt;
    return "(dp (x) id)dp != (id (x) d)dp at " + hopf::describe(k);
  });
  auto second = hopf::run_law("e2-succ-prec", n, keys, jobs, [&](const auto& k) -> std::optional<std::string> {
    if (hopf::apply_left(prec(k), succ) == hopf::apply_right(succ(k), prec)) return std::nullopt;
    return "(ds (x) id)dp != (id (x) dp)ds at " + hopf::describe(k);
  });
  auto third = hopf::run_law("e2-succ-succ", n, keys, jobs, [&](const auto& k) -> std::optional<std::string> {
    const auto d = succ(k);
    if (hopf::apply_left(d, full) == hopf::apply_right(d, succ)) return std::nullopt;
    return "(d (x) id)ds != (id (x) ds)ds at " + hopf::describe(k);
  });
  return {first, second, third};
}

/// Split coproducts of a product xy, in terms of those of x and y.
template <class A>
Tensor<KeyOf<A>> expected_delta_of_product(const A& alg, Side side, const KeyOf<A>& x, const KeyOf<A>& y) {
  using L = LinComb<KeyOf<A>>;
  using T = Tensor<KeyOf<A>>;
  auto p = [&](const auto& a, const auto& b) { return alg.product(a, b); };
  auto left = [](const auto& a, const auto&) { return L(a); };
  auto right = [](const auto&, const auto& b) { return L(b); };
  const T dx = hopf::delta_sum(alg, x);
  const T dy = alg.delta(side, y);
  // Single-term tensors with a unit slot stand for "x alone" or "y alone".
  T out;
  if (side == Side::Prec) {
    out.add({y, x}, 1);                                             // y (x) x
    out += hopf::combine(dx, T{{y, alg.unit()}}, p, left);          // x'y (x) x''
    out += hopf::combine(T{{x, alg.unit()}}, dy, p, right);         // xy'< (x) y''<
    out += hopf::combine(T{{alg.unit(), x}}, dy, right, p);         // y'< (x) xy''<
    out += hopf::combine(dx, dy, p, p);                             // x'y'< (x) x''y''<
  } else {
    out.add({x, y}, 1);                                             // x (x) y
    out += hopf::combine(dx, T{{alg.unit(), y}}, left, p);          // x' (x) x''y
    out += hopf::combine(T{{x, alg.unit()}}, dy, p, right);         // xy'> (x) y''>
    out += hopf::combine(T{{alg.unit(), x}}, dy, right, p);         // y'> (x) xy''>
    out += hopf::combine(dx, dy, p, p);                             // x'y'> (x) x''y''>
  }
  return out;
}

/// Split coproducts of x<-y, in terms of those of x and y.
template <class A>
Tensor<KeyOf<A>> expected_delta_of_nwarrow(const A& alg, Side side, const KeyOf<A>& x, const KeyOf<A>& y) {
  using L = LinComb<KeyOf<A>>;
  using T = Tensor<KeyOf<A>>;
  auto p = [&](const auto& a, const auto& b) { return alg.product(a, b); };
  auto g = [&](const auto& a, const auto& b) { return alg.nwarrow(a, b); };
  auto left = [](const auto& a, const auto&) { return L(a); };
  auto right = [](const auto&, const auto& b) { return L(b); };
  const T xp = alg.delta(Side::Prec, x);
  const T xs = alg.delta(Side::Succ, x);
  const T dy = alg.delta(side, y);
  T out;
  if (side == Side::Prec) {
    out.add({y, x}, 1);                                        // y (x) x
    out += hopf::combine(T{{alg.unit(), x}}, dy, right, g);    // y'< (x) x<-y''<
    out += hopf::combine(xp, T{{y, alg.unit()}}, g, left);     // x'<<-y (x) x''<
    out += hopf::combine(xs, T{{y, alg.unit()}}, p, left);     // x'>y (x) x''>
    out += hopf::combine(xs, dy, p, g);                        // x'>y'< (x) x''><-y''<
  } else {
    out += hopf::combine(T{{alg.unit(), x}}, dy, right, g);    // y'> (x) x<-y''>
    out += hopf::combine(xs, T{{alg.unit(), y}}, left, g);     // x'> (x) x''><-y
    out += hopf::combine(xs, dy, p, g);                        // x'>y'> (x) x''><-y''>
  }
  return out;
}

/// Both product compatibilities and both grafting compatibilities on basis
/// pairs of total degree <= n.
template <class A>
std::vector<LawReport> check_compatibilities(const A& alg, int n, unsigned jobs = 1) {
  const auto pairs = hopf::pairs_up_to(hopf::bases_up_to(alg, n), n);
  std::vector<LawReport> out;
  for (Side side : {Side::Prec, Side::Succ}) {
    out.push_back(hopf::run_law("e3-" + hopf::to_string(side), n, pairs, jobs,
                                [&](const auto& pr) -> std::optional<std::string> {
                                  const auto& [x, y] = pr;
                                  auto lhs = hopf::delta(alg, side, alg.product(x, y));
                                  if (lhs == expected_delta_of_product(alg, side, x, y)) return std::nullopt;
                                  return "split of xy mismatch at " + hopf::describe(pr);
                                }));
  }
  for (Side side : {Side::Prec, Side::Succ}) {
    out.push_back(hopf::run_law("e4-" + hopf::to_string(side), n, pairs, jobs,
                                [&](const auto& pr) -> std::optional<std::string> {
                                  const auto& [x, y] = pr;
                                  auto lhs = hopf::delta(alg, side, alg.nwarrow(x, y));
                                  if (lhs == expected_delta_of_nwarrow(alg, side, x, y)) return std::nullopt;
                                  return "split of x<-y mismatch at " + hopf::describe(pr);
                                }));
  }
  return out;
}

}  // namespace hopflab::dupdend
