#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/hopf/algebras.hpp"
#include "hopflab/hopf/laws.hpp"
#include "hopflab/theta/theta.hpp"
#include "hopflab/words/words.hpp"

namespace hopflab::theta {

using exact::Scalar;
using hopf::LawReport;

/// Bilinear extension of the forest pairing.
inline Scalar pairing(const LinComb<OrderedForest>& x, const LinComb<OrderedForest>& y) {
  Scalar out = 0;
  for (const auto& [f, a] : x) {
    for (const auto& [g, b] : y) out += a * b * Scalar(exact::BigInt(pairing(f, g)));
  }
  return out;
}

/// Bilinear extension of the permutation pairing <s, t> = [s^-1 = t].
inline Scalar permutation_pairing(const LinComb<ParkingWord>& x, const LinComb<ParkingWord>& y) {
  Scalar out = 0;
  for (const auto& [s, a] : x) {
    for (const auto& [t, b] : y) {
      if (s.size() == t.size()) out += a * b * words::fqsym_pairing(s, t);
    }
  }
  return out;
}

/// Pairing laws on ordered forests of degree <= n, with products taken in
/// `alg` (an ordered-forest carrier, possibly corrupted):
///   symmetry, <F1 F2, G> = <F1 (x) F2, D^op G>, <F, G> = <Theta F, Theta G>
///   and <1..n, F> = n!/F!.
template <class A>
std::vector<LawReport> check_pairing(const A& alg, int n, unsigned jobs = 1) {
  using L = LinComb<OrderedForest>;
  const auto bases = hopf::bases_up_to(alg, n);
  const auto keys = hopf::keys_up_to(bases, n);
  std::vector<std::pair<OrderedForest, OrderedForest>> same_degree;
  for (int d = 1; d <= n; ++d) {
    for (const auto& f : bases[static_cast<std::size_t>(d)]) {
      for (const auto& g : bases[static_cast<std::size_t>(d)]) same_degree.emplace_back(f, g);
    }
  }
  std::vector<std::tuple<OrderedForest, OrderedForest, OrderedForest>> triples;
  for (int a = 1; a < n; ++a) {
    for (int b = 1; a + b <= n; ++b) {
      for (const auto& f1 : bases[static_cast<std::size_t>(a)]) {
        for (const auto& f2 : bases[static_cast<std::size_t>(b)]) {
          for (const auto& g : bases[static_cast<std::size_t>(a + b)]) triples.emplace_back(f1, f2, g);
        }
      }
    }
  }
  std::vector<LawReport> out;
  out.push_back(hopf::run_law("pairing-symmetric", n, same_degree, jobs,
                              [&](const auto& p) -> std::optional<std::string> {
                                if (pairing(p.first, p.second) == pairing(p.second, p.first)) return std::nullopt;
                                return "<F,G> != <G,F> at " + hopf::describe(p);
                              }));
  out.push_back(hopf::run_law("pairing-hopf", n, triples, jobs, [&](const auto& t) -> std::optional<std::string> {
    const auto& [f1, f2, g] = t;
    const Scalar lhs = pairing(alg.product(f1, f2), L(g));
    Scalar rhs = 0;
    for (const auto& [pr, c] : alg.coproduct(g)) {
      // D^op pairs f1 with the right factor of D(g).
      rhs += c * Scalar(exact::BigInt(pairing(f1, pr.second))) * Scalar(exact::BigInt(pairing(f2, pr.first)));
    }
    if (lhs == rhs) return std::nullopt;
    return "<F1F2,G> != <F1 (x) F2, D^op G> at " + hopf::describe(t);
  }));
  out.push_back(hopf::run_law("pairing-theta-isometry", n, same_degree, jobs,
                              [&](const auto& p) -> std::optional<std::string> {
                                const Scalar lhs = pairing(L(p.first), L(p.second));
                                if (lhs == permutation_pairing(theta(p.first), theta(p.second))) return std::nullopt;
                                return "<F,G> != <Theta F, Theta G> at " + hopf::describe(p);
                              }));
  out.push_back(hopf::run_law("pairing-factorial", n, keys, jobs, [&](const auto& f) -> std::optional<std::string> {
    L dots(alg.parse("1"));
    for (int i = 1; i < f.size(); ++i) dots = hopf::mul(alg, dots, L(alg.parse("1")));
    Scalar factorial = 1;
    for (int i = 2; i <= f.size(); ++i) factorial *= i;
    const Scalar expected = factorial / Scalar(exact::BigInt(forests::forest_factorial(f)));
    if (pairing(dots, L(f)) == expected) return std::nullopt;
    return "<1..n, F> != n!/F! at " + hopf::describe(f);
  }));
  return out;
}

/// Theta laws on forests of degree <= n, with the forest structure taken
/// from `alg`: multiplicative, comultiplicative from the opposite forest
/// coproduct to the permutation coproduct, and a morphism for the grafting
/// product and both split coproducts into the opposite-coproduct
/// permutation carrier.
template <class A>
std::vector<LawReport> check_theta(const A& alg, int n, unsigned jobs = 1) {
  using W = LinComb<ParkingWord>;
  const words::WordAlgebra fqsym(true), fqsym_cop(true, true);
  const auto bases = hopf::bases_up_to(alg, n);
  const auto keys = hopf::keys_up_to(bases, n);
  const auto pairs = hopf::pairs_up_to(bases, n);
  auto image = [&](const OrderedForest& f) -> W {
    if (f.empty()) return W(ParkingWord{});
    return theta(f);
  };
  std::vector<LawReport> out;
  out.push_back(hopf::run_law("theta-product", n, pairs, jobs, [&](const auto& p) -> std::optional<std::string> {
    if (theta(alg.product(p.first, p.second)) == hopf::mul(fqsym, theta(p.first), theta(p.second)))
      return std::nullopt;
    return "Theta(FG) != Theta(F)Theta(G) at " + hopf::describe(p);
  }));
  out.push_back(hopf::run_law("theta-coproduct", n, keys, jobs, [&](const auto& f) -> std::optional<std::string> {
    auto lhs = hopf::tensor_map<OrderedForest, ParkingWord>(exact::flip(alg.coproduct(f)), image, image);
    if (lhs == hopf::comul(fqsym, theta(f))) return std::nullopt;
    return "(Theta (x) Theta)D^op != D Theta at " + hopf::describe(f);
  }));
  if constexpr (A::has_dupdend) {
    out.push_back(hopf::run_law("theta-nwarrow", n, pairs, jobs, [&](const auto& p) -> std::optional<std::string> {
      if (theta(alg.nwarrow(p.first, p.second)) == hopf::nwarrow(fqsym_cop, theta(p.first), theta(p.second)))
        return std::nullopt;
      return "Theta(F<-G) != Theta(F)<-Theta(G) at " + hopf::describe(p);
    }));
    for (hopf::Side side : {hopf::Side::Prec, hopf::Side::Succ}) {
      out.push_back(hopf::run_law("theta-delta-" + hopf::to_string(side), n, keys, jobs,
                                  [&](const auto& f) -> std::optional<std::string> {
                                    auto lhs = hopf::tensor_map<OrderedForest, ParkingWord>(alg.delta(side, f), image,
                                                                                            image);
                                    if (lhs == hopf::delta(fqsym_cop, side, theta(f))) return std::nullopt;
                                    return "(Theta (x) Theta)delta != delta Theta at " + hopf::describe(f);
                                  }));
    }
  }
  return out;
}

}  // namespace hopflab::theta
