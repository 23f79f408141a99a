#include "hopflab/theta/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "hopflab/exactcore/parallel.hpp"

namespace hopflab::theta {

namespace {

std::vector<ParkingWord> sorted_by_text(std::vector<ParkingWord> in) {
  std::vector<std::pair<std::string, ParkingWord>> tagged;
  for (auto& w : in) tagged.emplace_back(words::to_string(w), std::move(w));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ParkingWord> out;
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

// ancestor[x][y]: y lies on the root path of x (reflexive).
std::vector<std::vector<char>> reach_table(const OrderedForest& f) {
  const int n = f.size();
  std::vector<std::vector<char>> t(static_cast<std::size_t>(n + 1), std::vector<char>(static_cast<std::size_t>(n + 1), 0));
  for (int x = 1; x <= n; ++x) {
    for (int y = x; y != 0; y = f.parent_of(y)) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
  }
  return t;
}

std::vector<LinComb<OrderedForest>> kernel_as_forests(const exact::Matrix& m, const std::vector<OrderedForest>& cols) {
  std::vector<LinComb<OrderedForest>> out;
  for (const auto& v : exact::kernel_basis(m)) {
    LinComb<OrderedForest> x;
    for (std::size_t i = 0; i < v.size(); ++i) x.add(cols[i], v[i]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<ParkingWord> s_set(const OrderedForest& f) {
  const int n = f.size();
  std::vector<ParkingWord> out;
  std::vector<char> placed(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> word;
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == n) {
      out.push_back(ParkingWord{word});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      const int p = f.parent_of(v);
      if (p != 0 && !placed[static_cast<std::size_t>(p)]) continue;
      placed[static_cast<std::size_t>(v)] = 1;
      word.push_back(v);
      rec();
      word.pop_back();
      placed[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec();
  return sorted_by_text(std::move(out));
}

LinComb<ParkingWord> theta(const OrderedForest& f) {
  LinComb<ParkingWord> out;
  for (auto& w : s_set(f)) out.add(w, 1);
  return out;
}

LinComb<ParkingWord> theta(const LinComb<OrderedForest>& x) {
  return exact::linear_map(x, [](const OrderedForest& f) { return theta(f); });
}

std::vector<ParkingWord> pairing_set(const OrderedForest& f, const OrderedForest& g) {
  std::vector<ParkingWord> out;
  if (f.size() != g.size()) return out;
  const int n = f.size();
  const auto rf = reach_table(f);
  const auto rg = reach_table(g);
  std::vector<int> image(static_cast<std::size_t>(n + 1), 0);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  // Assign p(1), p(2), ... ; every pair is checked once both ends are set.
  std::function<void(int)> rec = [&](int x) {
    if (x > n) {
      out.push_back(ParkingWord{std::vector<int>(image.begin() + 1, image.end())});
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      bool ok = true;
      for (int y = 1; y < x && ok; ++y) {
        const int b = image[static_cast<std::size_t>(y)];
        if (rf[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] && a < b) ok = false;
        if (rf[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] && b < a) ok = false;
        // p(y) above p(x) in g would force y >= x.
        if (rg[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) ok = false;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(a)] = 1;
      image[static_cast<std::size_t>(x)] = a;
      rec(x + 1);
      used[static_cast<std::size_t>(a)] = 0;
    }
  };
  rec(1);
  return out;
}

std::uint64_t pairing(const OrderedForest& f, const OrderedForest& g) { return pairing_set(f, g).size(); }

exact::Matrix pairing_matrix(int n, unsigned jobs) {
  const auto basis = forests::enumerate_ordered(n);
  std::vector<exact::Matrix::Row> rows(basis.size());
  exact::parallel_for(basis.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto v = pairing(basis[i], basis[j]);
      if (v) rows[i].emplace_back(j, exact::Scalar(static_cast<std::int64_t>(v)));
    }
  });
  exact::Matrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, std::move(rows[i]));
  return m;
}

const exact::Matrix& theta_matrix(int n, bool heap_only) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<exact::Matrix>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, heap_only}];
  if (!slot) {
    const auto cols = heap_only ? forests::enumerate_heap_ordered(n) : forests::enumerate_ordered(n);
    const auto rows = words::enumerate_permutations(n);
    std::map<ParkingWord, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
    exact::Matrix t(cols.size(), rows.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      exact::Matrix::Row r;
      for (const auto& w : s_set(cols[j])) r.emplace_back(index.at(w), exact::Scalar(1));
      t.set_row(j, std::move(r));
    }
    slot = std::make_unique<exact::Matrix>(t.transpose());
  }
  return *slot;
}

exact::GradedMap<OrderedForest, ParkingWord> theta_map(int max_degree, bool heap_only) {
  exact::GradedMap<OrderedForest, ParkingWord> out;
  for (int n = 1; n <= max_degree; ++n) {
    out.set_block(n, heap_only ? forests::enumerate_heap_ordered(n) : forests::enumerate_ordered(n),
                  words::enumerate_permutations(n), theta_matrix(n, heap_only));
  }
  return out;
}

std::vector<LinComb<OrderedForest>> theta_kernel_basis(int n) {
  return kernel_as_forests(theta_matrix(n), forests::enumerate_ordered(n));
}

std::vector<LinComb<OrderedForest>> pairing_kernel_basis(int n) {
  return kernel_as_forests(pairing_matrix(n), forests::enumerate_ordered(n));
}

}  // namespace hopflab::theta
