#pragma once

#include <map>
#include <mutex>

#include "hopflab/hopf/ops.hpp"

namespace hopflab::hopf {

/// Antipode of a graded connected bialgebra by the recursion
/// S(x) = -x - sum S(x') x'' over the reduced coproduct. Values are
/// memoized per basis key; the memo is shared and guarded, so one instance
/// may serve several threads.
template <class A>
class Antipode {
 public:
  using Key = KeyOf<A>;

  explicit Antipode(const A& alg) : alg_(alg) {}

  LinComb<Key> operator()(const Key& k) const {
    if (alg_.is_unit(k)) return LinComb<Key>(k);
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second;
    }
    LinComb<Key> out = -LinComb<Key>(k);
    for (const auto& [t, c] : reduced_coproduct(alg_, k)) {
      out.axpy(-c, mul(alg_, (*this)(t.first), LinComb<Key>(t.second)));
    }
    std::lock_guard lock(mutex_);
    return memo_.emplace(k, std::move(out)).first->second;
  }

  LinComb<Key> operator()(const LinComb<Key>& x) const {
    return exact::linear_map(x, [this](const Key& k) { return (*this)(k); });
  }

 private:
  const A& alg_;
  mutable std::mutex mutex_;
  mutable std::map<Key, LinComb<Key>> memo_;
};

}  // namespace hopflab::hopf
