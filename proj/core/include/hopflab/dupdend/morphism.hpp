#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/exactcore/graded_map.hpp"
#include "hopflab/forests/planar.hpp"
#include "hopflab/hopf/laws.hpp"

namespace hopflab::dupdend {

using exact::GradedMap;
using exact::LinComb;
using forests::Decoration;
using forests::GradedAlphabet;
using forests::PlanarForest;
using hopf::KeyOf;
using hopf::LawReport;
using hopf::Side;

/// The morphism of two-product algebras from decorated planar forests
/// (positive degree) to `target` that sends the one-vertex tree decorated d
/// to images[d]: a forest goes to the product of the images of its trees,
/// and a tree with root d over a nonempty forest G to images[d] <- phi(G).
/// Throws DomainError when an image is missing, not homogeneous of the
/// decoration's degree, or has a unit component.
template <class C>
GradedMap<PlanarForest, KeyOf<C>> free_duplicial_morphism(const C& target, const GradedAlphabet& alphabet,
                                                          const std::map<Decoration, LinComb<KeyOf<C>>>& images,
                                                          int max_degree) {
  using TK = KeyOf<C>;
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& sym : alphabet.symbols_of_degree(d)) {
      auto it = images.find(sym);
      if (it == images.end()) throw DomainError("no image for decoration " + forests::symbol_name(sym));
      for (const auto& [k, c] : it->second) {
        if (target.is_unit(k)) throw DomainError("generator image has a unit component");
        if (target.degree(k) != d) throw DomainError("generator image has the wrong degree");
      }
    }
  }
  std::map<PlanarForest, LinComb<TK>> memo;
  std::function<LinComb<TK>(const PlanarForest&)> phi = [&](const PlanarForest& f) -> LinComb<TK> {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    LinComb<TK> out;
    if (f.trees.size() > 1) {
      out = phi(forests::single(f.trees[0]));
      for (std::size_t i = 1; i < f.trees.size(); ++i) out = hopf::mul(target, out, phi(forests::single(f.trees[i])));
    } else {
      const auto& root = f.trees.at(0);
      const auto& gen = images.at(root.deco);
      out = root.children.empty() ? gen : hopf::nwarrow(target, gen, phi(PlanarForest{root.children}));
    }
    memo.emplace(f, out);
    return out;
  };
  GradedMap<PlanarForest, TK> out;
  for (int n = 1; n <= max_degree; ++n) {
    out.set_block_from(n, forests::enumerate_planar(n, alphabet), target.basis(n), phi);
  }
  return out;
}

namespace detail {

template <class S, class SK, class TK, class T>
LinComb<TK> apply_unital(const GradedMap<SK, TK>& psi, const S& src, const T& tgt, const SK& k) {
  if (src.is_unit(k)) return LinComb<TK>(tgt.unit());
  return psi.apply(k);
}

}  // namespace detail

/// Checks psi(xy) = psi(x)psi(y), psi(x<-y) = psi(x)<-psi(y) and
/// (psi (x) psi)delta = delta psi for both halves, on source bases of total
/// degree <= n.
template <class S, class T>
std::vector<LawReport> verify_dupdend_morphism(const GradedMap<KeyOf<S>, KeyOf<T>>& psi, const S& src, const T& tgt,
                                               int n, unsigned jobs = 1) {
  using TK = KeyOf<T>;
  const auto bases = hopf::bases_up_to(src, n);
  const auto pairs = hopf::pairs_up_to(bases, n);
  const auto keys = hopf::keys_up_to(bases, n);
  auto image = [&](const auto& k) { return psi.apply(k); };
  std::vector<LawReport> out;
  out.push_back(hopf::run_law("morphism-product", n, pairs, jobs, [&](const auto& p) -> std::optional<std::string> {
    if (psi.apply(src.product(p.first, p.second)) == hopf::mul(tgt, psi.apply(p.first), psi.apply(p.second)))
      return std::nullopt;
    return "psi(xy) != psi(x)psi(y) at " + hopf::describe(p);
  }));
  out.push_back(hopf::run_law("morphism-nwarrow", n, pairs, jobs, [&](const auto& p) -> std::optional<std::string> {
    if (psi.apply(src.nwarrow(p.first, p.second)) == hopf::nwarrow(tgt, psi.apply(p.first), psi.apply(p.second)))
      return std::nullopt;
    return "psi(x<-y) != psi(x)<-psi(y) at " + hopf::describe(p);
  }));
  for (Side side : {Side::Prec, Side::Succ}) {
    out.push_back(hopf::run_law("morphism-delta-" + hopf::to_string(side), n, keys, jobs,
                                [&](const auto& k) -> std::optional<std::string> {
                                  auto lhs = hopf::tensor_map<KeyOf<S>, TK>(src.delta(side, k), image, image);
                                  if (lhs == hopf::delta(tgt, side, psi.apply(k))) return std::nullopt;
                                  return "(psi (x) psi)delta != delta psi at " + hopf::describe(k);
                                }));
  }
  return out;
}

/// Checks that the unital extension of psi is multiplicative and
/// comultiplicative; with source_cop the source coproduct is flipped first.
template <class S, class T>
std::vector<LawReport> verify_hopf_morphism(const GradedMap<KeyOf<S>, KeyOf<T>>& psi, const S& src, const T& tgt,
                                            int n, bool source_cop = false, unsigned jobs = 1) {
  using TK = KeyOf<T>;
  const auto bases = hopf::bases_up_to(src, n);
  const auto pairs = hopf::pairs_up_to(bases, n);
  const auto keys = hopf::keys_up_to(bases, n);
  auto image = [&](const auto& k) { return detail::apply_unital(psi, src, tgt, k); };
  std::vector<LawReport> out;
  out.push_back(hopf::run_law("hopf-product", n, pairs, jobs, [&](const auto& p) -> std::optional<std::string> {
    if (psi.apply(src.product(p.first, p.second)) == hopf::mul(tgt, psi.apply(p.first), psi.apply(p.second)))
      return std::nullopt;
    return "psi(xy) != psi(x)psi(y) at " + hopf::describe(p);
  }));
  out.push_back(hopf::run_law("hopf-coproduct", n, keys, jobs, [&](const auto& k) -> std::optional<std::string> {
    auto d = src.coproduct(k);
    if (source_cop) d = exact::flip(d);
    auto lhs = hopf::tensor_map<KeyOf<S>, TK>(d, image, image);
    if (lhs == hopf::comul(tgt, psi.apply(k))) return std::nullopt;
    return "(psi (x) psi)D != D psi at " + hopf::describe(k);
  }));
  return out;
}

/// Every block square and of full rank.
template <class SK, class TK>
LawReport check_bijective(const GradedMap<SK, TK>& psi, int n) {
  LawReport r{"bijective", n, 0, {}};
  for (int d = 1; d <= n; ++d) {
    ++r.checked;
    if (!psi.has_degree(d)) {
      r.failures.push_back("degree " + std::to_string(d) + ": no block");
      continue;
    }
    const auto& b = psi.block(d);
    const auto rk = exact::rank(b.matrix);
    if (b.source.size() != b.target.size() || rk != b.source.size()) {
      r.failures.push_back("degree " + std::to_string(d) + ": " + std::to_string(b.target.size()) + "x" +
                           std::to_string(b.source.size()) + " block of rank " + std::to_string(rk));
    }
  }
  return r;
}

/// Bijectivity, the two-product/split morphism laws and the Hopf morphism
/// laws for psi, up to degree n.
template <class S, class T>
std::vector<LawReport> verify_hopf_iso(const GradedMap<KeyOf<S>, KeyOf<T>>& psi, const S& src, const T& tgt, int n,
                                       unsigned jobs = 1) {
  std::vector<LawReport> out{check_bijective(psi, n)};
  for (auto& r : verify_dupdend_morphism(psi, src, tgt, n, jobs)) out.push_back(std::move(r));
  for (auto& r : verify_hopf_morphism(psi, src, tgt, n, false, jobs)) out.push_back(std::move(r));
  return out;
}

}  // namespace hopflab::dupdend
