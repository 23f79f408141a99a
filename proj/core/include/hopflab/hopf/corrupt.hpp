#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/hopf/ops.hpp"

namespace hopflab::hopf {

enum class CorruptOp { Product, Coproduct, DeltaPrec, DeltaSucc, Nwarrow };

inline std::string to_string(CorruptOp op);

/// An algebra identical to A except that one structure constant of one
/// operation, on one chosen input, is doubled. Used as a negative control:
/// a law checker that passes on A should fail on a Corrupted<A>.
template <class A>
class Corrupted : public A {
 public:
  using Key = KeyOf<A>;

  Corrupted(A base, CorruptOp op, Key first, Key second = {})
      : A(std::move(base)), op_(op), first_(std::move(first)), second_(std::move(second)) {}

  CorruptOp op() const { return op_; }
  const Key& first() const { return first_; }
  const Key& second() const { return second_; }

  LinComb<Key> product(const Key& a, const Key& b) const {
    auto out = A::product(a, b);
    if (op_ == CorruptOp::Product && a == first_ && b == second_) bump(out);
    return out;
  }

  Tensor<Key> coproduct(const Key& k) const {
    auto out = A::coproduct(k);
    if (op_ == CorruptOp::Coproduct && k == first_) bump(out);
    return out;
  }

  Tensor<Key> delta(Side side, const Key& k) const {
    auto out = A::delta(side, k);
    const CorruptOp wanted = side == Side::Prec ? CorruptOp::DeltaPrec : CorruptOp::DeltaSucc;
    if (op_ == wanted && k == first_) bump(out);
    return out;
  }

  LinComb<Key> nwarrow(const Key& a, const Key& b) const {
    auto out = A::nwarrow(a, b);
    if (op_ == CorruptOp::Nwarrow && a == first_ && b == second_) bump(out);
    return out;
  }

 private:
  template <class L>
  static void bump(L& x) {
    if (x.empty()) return;
    const auto first = exact::canonical_terms(x).front();
    auto key = *first.first;
    auto c = *first.second;
    x.add(key, c);
  }

  CorruptOp op_;
  Key first_;
  Key second_;
};

/// Picks, with a seeded generator, an input of degree <= 3 on which `op`
/// is nonzero and returns the corrupted algebra. Binary operations use
/// pairs of degree-1 keys or a degree-1 key with a degree-2 key.
template <class A>
Corrupted<A> make_corrupted(const A& alg, CorruptOp op, unsigned seed) {
  using Key = KeyOf<A>;
  std::vector<std::pair<Key, Key>> candidates;
  const bool binary = op == CorruptOp::Product || op == CorruptOp::Nwarrow;
  for (int d = 1; d <= 3 && candidates.empty(); ++d) {
    if (binary) {
      for (int i = 1; i < d + 1 && candidates.empty(); ++i) {
        for (const auto& a : alg.basis(i)) {
          for (const auto& b : alg.basis(d + 1 - i)) {
            bool nonzero = false;
            if (op == CorruptOp::Product) nonzero = !alg.product(a, b).empty();
            if constexpr (A::has_dupdend) {
              if (op == CorruptOp::Nwarrow) nonzero = !alg.nwarrow(a, b).empty();
            }
            if (nonzero) candidates.emplace_back(a, b);
          }
        }
      }
    } else {
      for (const auto& k : alg.basis(d)) {
        bool nonzero = false;
        if (op == CorruptOp::Coproduct) nonzero = !reduced_coproduct(alg, k).empty();
        if constexpr (A::has_dupdend) {
          if (op == CorruptOp::DeltaPrec) nonzero = !alg.delta(Side::Prec, k).empty();
          if (op == CorruptOp::DeltaSucc) nonzero = !alg.delta(Side::Succ, k).empty();
        }
        if (nonzero) candidates.emplace_back(k, Key{});
      }
    }
  }
  if (candidates.empty()) throw DomainError("no input of degree <= 3 to corrupt for " + to_string(op));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  auto& chosen = candidates[pick(rng)];
  return Corrupted<A>(alg, op, chosen.first, chosen.second);
}

inline std::string to_string(CorruptOp op) {
  switch (op) {
    case CorruptOp::Product:
      return "product";
    case CorruptOp::Coproduct:
      return "coproduct";
    case CorruptOp::DeltaPrec:
      return "delta_prec";
    case CorruptOp::DeltaSucc:
      return "delta_succ";
    case CorruptOp::Nwarrow:
      return "nwarrow";
  }
  return "?";
}

}  // namespace hopflab::hopf
