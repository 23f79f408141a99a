#include "hopflab/forests/ordered.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <utility>

#include "hopflab/error.hpp"

namespace hopflab::forests {

namespace {

std::vector<std::vector<int>> children_lists(const OrderedForest& f) {
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(f.size() + 1));
  for (int v = 1; v <= f.size(); ++v) kids[static_cast<std::size_t>(f.parent_of(v))].push_back(v);
  return kids;
}

void write_tree(int v, const std::vector<std::vector<int>>& kids, std::string& out) {
  out += std::to_string(v);
  const auto& ch = kids[static_cast<std::size_t>(v)];
  if (ch.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i) out += ',';
    write_tree(ch[i], kids, out);
  }
  out += ')';
}

class OrderedParser {
 public:
  explicit OrderedParser(std::string_view text) : text_(text) {}

  OrderedForest parse() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (peek() != ')') fail("expected ')' for the empty forest");
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) fail("unexpected input after '()'");
      return {};
    }
    if (pos_ == text_.size()) fail("empty input (write '()' for the empty forest)");
    while (pos_ < text_.size()) {
      tree(0);
      skip_ws();
    }
    const int n = static_cast<int>(edges_.size());
    OrderedForest f;
    f.parent.assign(static_cast<std::size_t>(n), -1);
    for (auto [v, p] : edges_) {
      if (v > n) fail("labels must be exactly 1.." + std::to_string(n));
      if (f.parent[static_cast<std::size_t>(v - 1)] != -1) fail("duplicate label " + std::to_string(v));
      f.parent[static_cast<std::size_t>(v - 1)] = p;
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ordered forest: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int number() {
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) fail("label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a label");
    if (value < 1) fail("labels start at 1");
    return static_cast<int>(value);
  }

  void tree(int parent) {
    skip_ws();
    int v = number();
    edges_.emplace_back(v, parent);
    skip_ws();
    if (peek() != '(') return;
    ++pos_;
    while (true) {
      tree(v);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        return;
      }
      fail("expected ',' or ')'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace

void validate(const OrderedForest& f) {
  const int n = f.size();
  for (int v = 1; v <= n; ++v) {
    int p = f.parent_of(v);
    if (p < 0 || p > n || p == v) throw DomainError("bad parent of vertex " + std::to_string(v));
  }
  for (int v = 1; v <= n; ++v) {
    int steps = 0;
    for (int x = v; x != 0; x = f.parent_of(x)) {
      if (++steps > n) throw DomainError("parent map has a cycle");
    }
  }
}

std::string to_string(const OrderedForest& f) {
  if (f.empty()) return "()";
  auto kids = children_lists(f);
  std::string out;
  for (std::size_t i = 0; i < kids[0].size(); ++i) {
    if (i) out += ' ';
    write_tree(kids[0][i], kids, out);
  }
  return out;
}

OrderedForest parse_ordered(std::string_view text) {
  OrderedForest f = OrderedParser(text).parse();
  return f;
}

OrderedForest restandardize(const LabeledForest& part) {
  if (part.labels.size() != part.parents.size()) throw DomainError("labeled forest: label/parent size mismatch");
  std::map<int, int> rank;
  for (int l : part.labels) {
    if (l < 1) throw DomainError("labels must be positive");
    if (!rank.emplace(l, 0).second) throw DomainError("duplicate label " + std::to_string(l));
  }
  int next = 1;
  for (auto& [l, r] : rank) r = next++;
  OrderedForest out;
  out.parent.assign(part.labels.size(), 0);
  for (std::size_t i = 0; i < part.labels.size(); ++i) {
    int p = part.parents[i];
    int np = 0;
    if (p != 0) {
      auto it = rank.find(p);
      if (it == rank.end()) throw DomainError("parent label " + std::to_string(p) + " not in the forest");
      np = it->second;
    }
    out.parent[static_cast<std::size_t>(rank[part.labels[i]] - 1)] = np;
  }
  return out;
}

bool is_heap_ordered(const OrderedForest& f) {
  for (int v = 1; v <= f.size(); ++v) {
    if (f.parent_of(v) >= v) return false;
  }
  return true;
}

bool path_reaches(const OrderedForest& f, int v, int w) {
  const int n = f.size();
  if (v < 1 || v > n || w < 1 || w > n) throw DomainError("vertex out of range 1.." + std::to_string(n));
  for (int x = v; x != 0; x = f.parent_of(x)) {
    if (x == w) return true;
  }
  return false;
}

PlanarForest planar_view(const OrderedForest& f) {
  auto kids = children_lists(f);
  std::function<PlanarTree(int)> build = [&](int v) {
    PlanarTree t;
    for (int c : kids[static_cast<std::size_t>(v)]) t.children.push_back(build(c));
    return t;
  };
  PlanarForest out;
  for (int r : kids[0]) out.trees.push_back(build(r));
  return out;
}

std::vector<OrderedCut> admissible_cuts(const OrderedForest& f) {
  // Work on the planar view and translate preorder indices back to labels.
  auto kids = children_lists(f);
  std::vector<int> label_of;
  std::function<void(int)> walk = [&](int v) {
    label_of.push_back(v);
    for (int c : kids[static_cast<std::size_t>(v)]) walk(c);
  };
  for (int r : kids[0]) walk(r);
  FlatPlanar flat = flatten(planar_view(f));

  std::vector<OrderedCut> out;
  for_each_antichain(flat, [&](const std::vector<char>& mask) {
    OrderedCut cut;
    std::vector<char> lea(mask.size(), 0);
    for (int v = 1; v <= flat.size(); ++v) {
      if (!mask[static_cast<std::size_t>(v - 1)]) continue;
      cut.vertices.push_back(label_of[static_cast<std::size_t>(v - 1)]);
      for (int w = v; w <= flat.subtree_end[static_cast<std::size_t>(v - 1)]; ++w) lea[static_cast<std::size_t>(w - 1)] = 1;
    }
    std::sort(cut.vertices.begin(), cut.vertices.end());
    std::vector<char> in_lea(static_cast<std::size_t>(f.size() + 1), 0);
    for (int v = 1; v <= flat.size(); ++v) {
      if (lea[static_cast<std::size_t>(v - 1)]) in_lea[static_cast<std::size_t>(label_of[static_cast<std::size_t>(v - 1)])] = 1;
    }
    for (int l = 1; l <= f.size(); ++l) {
      int p = f.parent_of(l);
      if (in_lea[static_cast<std::size_t>(l)]) {
        cut.lea.labels.push_back(l);
        cut.lea.parents.push_back(p != 0 && in_lea[static_cast<std::size_t>(p)] ? p : 0);
      } else {
        cut.roo.labels.push_back(l);
        cut.roo.parents.push_back(p);
      }
    }
    out.push_back(std::move(cut));
  });
  return out;
}

OrderedForest concat(const OrderedForest& f, const OrderedForest& g) {
  OrderedForest out = f;
  const int shift = f.size();
  for (int p : g.parent) out.parent.push_back(p == 0 ? 0 : p + shift);
  return out;
}

OrderedForest graft_greatest(const OrderedForest& f, const OrderedForest& g) {
  if (f.empty() || g.empty()) throw DomainError("grafting needs two non-empty forests");
  OrderedForest out = f;
  const int shift = f.size();
  for (int p : g.parent) out.parent.push_back(p == 0 ? shift : p + shift);
  return out;
}

std::vector<int> subtree_sizes(const OrderedForest& f) {
  std::vector<int> size(static_cast<std::size_t>(f.size()), 0);
  for (int v = 1; v <= f.size(); ++v) {
    for (int x = v; x != 0; x = f.parent_of(x)) ++size[static_cast<std::size_t>(x - 1)];
  }
  return size;
}

std::uint64_t forest_factorial(const OrderedForest& f) {
  std::uint64_t out = 1;
  for (int s : subtree_sizes(f)) {
    auto size = static_cast<std::uint64_t>(s);
    if (out > std::numeric_limits<std::uint64_t>::max() / size) throw DomainError("forest factorial overflows 64 bits");
    out *= size;
  }
  return out;
}

OrderedForest reverse_labels(const OrderedForest& f) {
  const int n = f.size();
  OrderedForest out;
  out.parent.assign(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    int p = f.parent_of(v);
    out.parent[static_cast<std::size_t>(n - v)] = p == 0 ? 0 : n + 1 - p;
  }
  return out;
}

namespace {

std::vector<OrderedForest> sorted_by_text(std::vector<OrderedForest> in) {
  std::vector<std::pair<std::string, OrderedForest>> tagged;
  tagged.reserve(in.size());
  for (auto& f : in) tagged.emplace_back(to_string(f), std::move(f));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<OrderedForest> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

bool acyclic(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  // 0 = unvisited, 1 = on the current path, 2 = known to reach a root.
  std::vector<char> state(static_cast<std::size_t>(n + 1), 0);
  for (int v = 1; v <= n; ++v) {
    int x = v;
    while (x != 0 && state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      x = parent[static_cast<std::size_t>(x - 1)];
    }
    if (x != 0 && state[static_cast<std::size_t>(x)] == 1) return false;
    for (int y = v; y != x; y = parent[static_cast<std::size_t>(y - 1)]) state[static_cast<std::size_t>(y)] = 2;
  }
  return true;
}

}  // namespace

std::vector<OrderedForest> enumerate_ordered(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<OrderedForest> out;
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      if (acyclic(parent)) out.push_back(OrderedForest{parent});
      return;
    }
    for (int p = 0; p <= n; ++p) {
      if (p == v) continue;
      parent[static_cast<std::size_t>(v - 1)] = p;
      rec(v + 1);
    }
  };
  rec(1);
  return sorted_by_text(std::move(out));
}

std::vector<OrderedForest> enumerate_heap_ordered(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<OrderedForest> out;
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(OrderedForest{parent});
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[static_cast<std::size_t>(v - 1)] = p;
      rec(v + 1);
    }
  };
  rec(1);
  return sorted_by_text(std::move(out));
}

}  // namespace hopflab::forests
