#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls the code under test except for key types and
// constructors, so a bug in the library cannot hide in its own oracle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/exactcore/matrix.hpp"
#include "hopflab/forests/ordered.hpp"
#include "hopflab/forests/planar.hpp"
#include "hopflab/words/words.hpp"

namespace oracle {

using hopflab::exact::LinComb;
using hopflab::exact::Scalar;
using hopflab::exact::Tensor;
using hopflab::forests::OrderedForest;
using hopflab::forests::PlanarForest;
using hopflab::forests::PlanarTree;
using hopflab::words::ParkingWord;

inline std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

inline std::uint64_t cayley_forests(int n) {
  std::uint64_t out = 1;
  for (int i = 0; i < n - 1; ++i) out *= static_cast<std::uint64_t>(n + 1);
  return out;
}

/// Rooted trees with n vertices (unlabeled), by the Euler transform
/// recursion; rooted forests with n vertices = rooted trees with n+1.
inline std::vector<std::uint64_t> rooted_trees(int max_n) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(max_n + 1), 0);
  if (max_n >= 1) a[1] = 1;
  for (int n = 1; n < max_n; ++n) {
    std::uint64_t s = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t d_sum = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) d_sum += static_cast<std::uint64_t>(d) * a[static_cast<std::size_t>(d)];
      }
      s += d_sum * a[static_cast<std::size_t>(n - k + 1)];
    }
    a[static_cast<std::size_t>(n + 1)] = s / static_cast<std::uint64_t>(n);
  }
  return a;
}

// ---------------------------------------------------------------- ordered

/// x ->> y: y is x or an ancestor of x.
inline bool reaches(const std::vector<int>& parent, int x, int y) {
  for (int v = x; v != 0; v = parent[static_cast<std::size_t>(v - 1)]) {
    if (v == y) return true;
  }
  return false;
}

/// Induced forest on a label subset, relabeled increasingly.
inline OrderedForest induced_ordered(const std::vector<int>& parent, const std::vector<int>& labels) {
  std::map<int, int> rank;
  for (std::size_t i = 0; i < labels.size(); ++i) rank[labels[i]] = static_cast<int>(i) + 1;
  OrderedForest out;
  for (int v : labels) {
    int p = parent[static_cast<std::size_t>(v - 1)];
    out.parent.push_back(rank.count(p) ? rank[p] : 0);
  }
  return out;
}

/// Cuts of an ordered forest: all vertex subsets that are antichains for
/// ->>; Lea is everything at or above a cut vertex. want_greatest_in_lea is
/// -1 (any), 0 or 1.
inline Tensor<OrderedForest> ordered_cuts(const OrderedForest& f, int want_greatest_in_lea, bool nontrivial) {
  const int n = f.size();
  Tensor<OrderedForest> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto in = [&](int v) { return (mask >> (v - 1)) & 1u; };
    bool antichain = true;
    for (int x = 1; x <= n && antichain; ++x) {
      for (int y = 1; y <= n && antichain; ++y) {
        if (x != y && in(x) && in(y) && reaches(f.parent, x, y)) antichain = false;
      }
    }
    if (!antichain) continue;
    std::vector<int> lea, roo;
    for (int v = 1; v <= n; ++v) {
      bool above = false;
      for (int c = 1; c <= n; ++c) {
        if (in(c) && reaches(f.parent, v, c)) above = true;
      }
      (above ? lea : roo).push_back(v);
    }
    if (nontrivial && (lea.empty() || roo.empty())) continue;
    if (want_greatest_in_lea >= 0 && (n > 0 && !lea.empty() && lea.back() == n) != (want_greatest_in_lea == 1))
      continue;
    out.add({induced_ordered(f.parent, lea), induced_ordered(f.parent, roo)}, 1);
  }
  return out;
}

inline Tensor<OrderedForest> ordered_coproduct(const OrderedForest& f) { return ordered_cuts(f, -1, false); }

/// Nontrivial cuts with the greatest vertex in Lea (prec) or in Roo.
inline Tensor<OrderedForest> ordered_split(const OrderedForest& f, bool prec) {
  return ordered_cuts(f, prec ? 1 : 0, true);
}

/// sigma as a word: sigma[i-1] = sigma(i). S_F = permutations with
/// (i ->> j) => sigma^-1(i) >= sigma^-1(j).
inline std::vector<ParkingWord> linear_extensions(const OrderedForest& f) {
  const int n = f.size();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<ParkingWord> out;
  do {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p - 1)] - 1)] = p;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      for (int j = 1; j <= n && ok; ++j) {
        if (reaches(f.parent, i, j) && inv[static_cast<std::size_t>(i - 1)] < inv[static_cast<std::size_t>(j - 1)])
          ok = false;
      }
    }
    if (ok) out.push_back(ParkingWord{sigma});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

/// S(F,G) straight from the definition, over all bijections; each map is
/// written as the word (f(1), ..., f(n)).
inline std::vector<ParkingWord> pairing_maps(const OrderedForest& f, const OrderedForest& g) {
  if (f.size() != g.size()) return {};
  const int n = f.size();
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 1);
  std::vector<ParkingWord> out;
  do {
    auto img = [&](int x) { return map[static_cast<std::size_t>(x - 1)]; };
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x) {
      for (int y = 1; y <= n && ok; ++y) {
        if (reaches(f.parent, x, y) && img(x) < img(y)) ok = false;
        if (reaches(g.parent, img(x), img(y)) && x < y) ok = false;
      }
    }
    if (ok) out.push_back(ParkingWord{map});
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

inline std::uint64_t pairing(const OrderedForest& f, const OrderedForest& g) { return pairing_maps(f, g).size(); }

inline ParkingWord inverse(const ParkingWord& s) {
  ParkingWord out{std::vector<int>(s.letters.size())};
  for (std::size_t i = 0; i < s.letters.size(); ++i)
    out.letters[static_cast<std::size_t>(s.letters[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

/// Product over vertices of the number of descendants (inclusive).
inline std::uint64_t tree_factorial(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::uint64_t out = 1;
  for (int v = 1; v <= n; ++v) {
    std::uint64_t size = 0;
    for (int w = 1; w <= n; ++w) size += reaches(parent, w, v) ? 1 : 0;
    out *= size;
  }
  return out;
}

// ---------------------------------------------------------------- planar

/// Preorder vertex list with parent pointers and decorations, built by a
/// plain recursive walk.
struct Walk {
  std::vector<int> parent;
  std::vector<hopflab::forests::Decoration> deco;
};

inline void walk_tree(const PlanarTree& t, int parent, Walk& w) {
  w.parent.push_back(parent);
  w.deco.push_back(t.deco);
  const int me = static_cast<int>(w.parent.size());
  for (const auto& c : t.children) walk_tree(c, me, w);
}

inline Walk walk(const PlanarForest& f) {
  Walk w;
  for (const auto& t : f.trees) walk_tree(t, 0, w);
  return w;
}

inline PlanarForest induced_planar(const Walk& w, const std::vector<bool>& keep) {
  const int n = static_cast<int>(w.parent.size());
  std::function<PlanarTree(int)> build = [&](int v) {
    PlanarTree t{w.deco[static_cast<std::size_t>(v - 1)], {}};
    for (int c = v + 1; c <= n; ++c) {
      if (keep[static_cast<std::size_t>(c - 1)] && w.parent[static_cast<std::size_t>(c - 1)] == v)
        t.children.push_back(build(c));
    }
    return t;
  };
  PlanarForest out;
  for (int v = 1; v <= n; ++v) {
    if (!keep[static_cast<std::size_t>(v - 1)]) continue;
    int p = w.parent[static_cast<std::size_t>(v - 1)];
    if (p == 0 || !keep[static_cast<std::size_t>(p - 1)]) out.trees.push_back(build(v));
  }
  return out;
}

struct PlanarCutOracle {
  PlanarForest lea, roo;
  bool rightmost_leaf_in_lea = false;
};

/// Every admissible cut by subset enumeration.
inline std::vector<PlanarCutOracle> planar_cuts(const PlanarForest& f) {
  const Walk w = walk(f);
  const int n = static_cast<int>(w.parent.size());
  // The rightmost leaf is the last vertex in preorder.
  std::vector<PlanarCutOracle> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto in = [&](int v) { return ((mask >> (v - 1)) & 1u) != 0; };
    bool antichain = true;
    for (int x = 1; x <= n && antichain; ++x) {
      for (int y = 1; y <= n && antichain; ++y) {
        if (x != y && in(x) && in(y) && reaches(w.parent, x, y)) antichain = false;
      }
    }
    if (!antichain) continue;
    std::vector<bool> lea(static_cast<std::size_t>(n)), roo(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      bool above = false;
      for (int c = 1; c <= n; ++c) {
        if (in(c) && reaches(w.parent, v, c)) above = true;
      }
      lea[static_cast<std::size_t>(v - 1)] = above;
      roo[static_cast<std::size_t>(v - 1)] = !above;
    }
    out.push_back({induced_planar(w, lea), induced_planar(w, roo), n > 0 && lea[static_cast<std::size_t>(n - 1)]});
  }
  return out;
}

inline Tensor<PlanarForest> planar_coproduct(const PlanarForest& f) {
  Tensor<PlanarForest> out;
  for (const auto& c : planar_cuts(f)) out.add({c.lea, c.roo}, 1);
  return out;
}

// ---------------------------------------------------------------- words

/// Parkization by a closed form: walking the distinct values upward, each
/// keeps its gap to the previous one unless that would break the parking
/// condition, in which case it drops to (letters below it) + 1.
inline ParkingWord parkize(const std::vector<int>& w) {
  std::vector<int> values(w);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::map<int, int> image;
  int prev_value = 0, prev_image = 0;
  for (int v : values) {
    int below = static_cast<int>(std::count_if(w.begin(), w.end(), [&](int x) { return x < v; }));
    int img = std::min(prev_image + (v - prev_value), below + 1);
    image[v] = img;
    prev_value = v;
    prev_image = img;
  }
  ParkingWord out;
  for (int x : w) out.letters.push_back(image[x]);
  return out;
}

/// Shifted shuffle by choosing the positions of the left letters.
inline LinComb<ParkingWord> shuffle(const ParkingWord& s, const ParkingWord& t) {
  const int k = s.size(), l = t.size();
  LinComb<ParkingWord> out;
  for (std::uint32_t mask = 0; mask < (1u << (k + l)); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    ParkingWord w;
    int i = 0, j = 0;
    for (int p = 0; p < k + l; ++p) {
      if ((mask >> p) & 1u) {
        w.letters.push_back(s.letters[static_cast<std::size_t>(i++)]);
      } else {
        w.letters.push_back(t.letters[static_cast<std::size_t>(j++)] + k);
      }
    }
    out.add(w, 1);
  }
  return out;
}

inline Tensor<ParkingWord> deconcatenation(const ParkingWord& s) {
  Tensor<ParkingWord> out;
  for (int k = 0; k <= s.size(); ++k) {
    std::vector<int> pre(s.letters.begin(), s.letters.begin() + k), suf(s.letters.begin() + k, s.letters.end());
    out.add({parkize(pre), parkize(suf)}, 1);
  }
  return out;
}

// ---------------------------------------------------------------- linear algebra

/// Rank by textbook Gaussian elimination on a dense copy.
inline std::size_t rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Graded dimensions of the free two-product algebra on an alphabet with
/// counts a_1, a_2, ...: fixed point of f = 1 + a f^2.
inline std::vector<Scalar> planar_series(const std::vector<Scalar>& alphabet, std::size_t order) {
  auto mul = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> z(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
      for (std::size_t j = 0; i + j <= order; ++j) z[i + j] += x[i] * y[j];
    }
    return z;
  };
  std::vector<Scalar> a(order + 1), f(order + 1);
  for (std::size_t i = 0; i < alphabet.size() && i <= order; ++i) a[i] = alphabet[i];
  f[0] = 1;
  for (std::size_t it = 0; it <= order; ++it) {
    auto g = mul(a, mul(f, f));
    g[0] += 1;
    f = g;
  }
  return f;
}

}  // namespace oracle
