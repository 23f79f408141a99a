#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/exactcore/parallel.hpp"
#include "hopflab/hopf/antipode.hpp"
#include "hopflab/hopf/ops.hpp"

namespace hopflab::hopf {

/// Outcome of checking one identity over a finite family of inputs.
struct LawReport {
  std::string law;
  int degree = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

inline bool all_passed(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

/// Bases of degrees 0..n, computed once.
template <class A>
std::vector<std::vector<KeyOf<A>>> bases_up_to(const A& alg, int n) {
  std::vector<std::vector<KeyOf<A>>> out;
  for (int d = 0; d <= n; ++d) out.push_back(alg.basis(d));
  return out;
}

/// Nonunit basis keys of degree 1..n.
template <class K>
std::vector<K> keys_up_to(const std::vector<std::vector<K>>& bases, int n) {
  std::vector<K> out;
  for (int d = 1; d <= n && d < static_cast<int>(bases.size()); ++d) out.insert(out.end(), bases[d].begin(), bases[d].end());
  return out;
}

/// Pairs of nonunit basis keys with total degree <= n.
template <class K>
std::vector<std::pair<K, K>> pairs_up_to(const std::vector<std::vector<K>>& bases, int n) {
  std::vector<std::pair<K, K>> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j <= n; ++j) {
      for (const auto& a : bases[i]) {
        for (const auto& b : bases[j]) out.emplace_back(a, b);
      }
    }
  }
  return out;
}

/// Triples of nonunit basis keys with total degree <= n.
template <class K>
std::vector<std::tuple<K, K, K>> triples_up_to(const std::vector<std::vector<K>>& bases, int n) {
  std::vector<std::tuple<K, K, K>> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j < n; ++j) {
      for (int k = 1; i + j + k <= n; ++k) {
        for (const auto& a : bases[i]) {
          for (const auto& b : bases[j]) {
            for (const auto& c : bases[k]) out.emplace_back(a, b, c);
          }
        }
      }
    }
  }
  return out;
}

/// Evaluates `check` on every item (in parallel when jobs > 1) and collects
/// failure messages in item order.
template <class Item, class Check>
LawReport run_law(std::string law, int degree, const std::vector<Item>& items, unsigned jobs, Check&& check) {
  std::vector<std::optional<std::string>> results(items.size());
  exact::parallel_for(items.size(), jobs, [&](std::size_t i) { results[i] = check(items[i]); });
  LawReport report{std::move(law), degree, items.size(), {}};
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  return report;
}

template <class K>
std::string describe(const K& k) {
  return exact::format_key(k);
}

template <class K>
std::string describe(const std::pair<K, K>& p) {
  return exact::format_key(p.first) + " ; " + exact::format_key(p.second);
}

template <class K>
std::string describe(const std::tuple<K, K, K>& t) {
  return exact::format_key(std::get<0>(t)) + " ; " + exact::format_key(std::get<1>(t)) + " ; " +
         exact::format_key(std::get<2>(t));
}

template <class A>
LawReport check_associativity(const A& alg, int n, unsigned jobs = 1) {
  const auto bases = bases_up_to(alg, n);
  return run_law("associativity", n, triples_up_to(bases, n), jobs,
                 [&](const auto& t) -> std::optional<std::string> {
                   using L = LinComb<KeyOf<A>>;
                   const auto& [a, b, c] = t;
                   auto lhs = mul(alg, alg.product(a, b), L(c));
                   auto rhs = mul(alg, L(a), alg.product(b, c));
                   if (lhs == rhs) return std::nullopt;
                   return "(xy)z != x(yz) at " + describe(t);
                 });
}

template <class A>
LawReport check_coassociativity(const A& alg, int n, unsigned jobs = 1) {
  const auto bases = bases_up_to(alg, n);
  return run_law("coassociativity", n, keys_up_to(bases, n), jobs,
                 [&](const auto& k) -> std::optional<std::string> {
                   auto d = alg.coproduct(k);
                   auto co = [&](const auto& x) { return alg.coproduct(x); };
                   if (apply_left(d, co) == apply_right(d, co)) return std::nullopt;
                   return "coassociativity fails at " + describe(k);
                 });
}

template <class A>
LawReport check_counit(const A& alg, int n, unsigned jobs = 1) {
  const auto bases = bases_up_to(alg, n);
  return run_law("counit", n, keys_up_to(bases, n), jobs, [&](const auto& k) -> std::optional<std::string> {
    LinComb<KeyOf<A>> left, right;
    for (const auto& [t, c] : alg.coproduct(k)) {
      if (alg.is_unit(t.first)) left.add(t.second, c);
      if (alg.is_unit(t.second)) right.add(t.first, c);
    }
    const LinComb<KeyOf<A>> x(k);
    if (left == x && right == x) return std::nullopt;
    return "counit law fails at " + describe(k);
  });
}

template <class A>
LawReport check_compatibility(const A& alg, int n, unsigned jobs = 1) {
  const auto bases = bases_up_to(alg, n);
  return run_law("compatibility", n, pairs_up_to(bases, n), jobs,
                 [&](const auto& p) -> std::optional<std::string> {
                   auto lhs = comul(alg, alg.product(p.first, p.second));
                   auto rhs = mul_tensor(alg, alg.coproduct(p.first), alg.coproduct(p.second));
                   if (lhs == rhs) return std::nullopt;
                   return "D(xy) != D(x)D(y) at " + describe(p);
                 });
}

template <class A>
LawReport check_antipode(const A& alg, int n, unsigned jobs = 1) {
  const auto bases = bases_up_to(alg, n);
  Antipode<A> s(alg);
  return run_law("antipode", n, keys_up_to(bases, n), jobs, [&](const auto& k) -> std::optional<std::string> {
    using L = LinComb<KeyOf<A>>;
    L left, right;
    for (const auto& [t, c] : alg.coproduct(k)) {
      left.axpy(c, mul(alg, s(t.first), L(t.second)));
      right.axpy(c, mul(alg, L(t.first), s(t.second)));
    }
    if (left.empty() && right.empty()) return std::nullopt;
    return "m(S (x) id)D or m(id (x) S)D nonzero at " + describe(k);
  });
}

/// The bialgebra and Hopf axioms: associativity, coassociativity, counit,
/// compatibility, antipode.
template <class A>
std::vector<LawReport> check_hopf(const A& alg, int n, unsigned jobs = 1) {
  return {check_associativity(alg, n, jobs), check_coassociativity(alg, n, jobs), check_counit(alg, n, jobs),
          check_compatibility(alg, n, jobs), check_antipode(alg, n, jobs)};
}

/// delta(Prec) + delta(Succ) equals the reduced coproduct.
template <class A>
LawReport check_split_sum(const A& alg, int n, unsigned jobs = 1) {
  const auto bases = bases_up_to(alg, n);
  return run_law("split-sum", n, keys_up_to(bases, n), jobs, [&](const auto& k) -> std::optional<std::string> {
    if (delta_sum(alg, k) == reduced_coproduct(alg, k)) return std::nullopt;
    return "delta_prec + delta_succ != reduced coproduct at " + describe(k);
  });
}

}  // namespace hopflab::hopf
