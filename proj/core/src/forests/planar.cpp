#include "hopflab/forests/planar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <utility>

#include "hopflab/error.hpp"

namespace hopflab::forests {

std::string symbol_name(const Decoration& d) {
  if (d == Decoration{}) return "";
  return "d" + std::to_string(d.degree) + "_" + std::to_string(d.index);
}

GradedAlphabet::GradedAlphabet(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) counts_.push_back(0);
  if (counts_[0] != 0) throw DomainError("alphabet must not contain degree-0 symbols");
  for (int c : counts_) {
    if (c < 0) throw DomainError("negative symbol count in alphabet");
  }
}

int GradedAlphabet::count(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(counts_.size())) return 0;
  return counts_[static_cast<std::size_t>(degree)];
}

bool GradedAlphabet::contains(const Decoration& d) const {
  return d.degree >= 1 && d.index >= 0 && d.index < count(d.degree);
}

std::vector<Decoration> GradedAlphabet::symbols_of_degree(int degree) const {
  std::vector<Decoration> out;
  for (int i = 0; i < count(degree); ++i) out.push_back({degree, i});
  return out;
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (auto c = a.deco <=> b.deco; c != 0) return c;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

bool operator==(const PlanarTree& a, const PlanarTree& b) {
  return a.deco == b.deco && a.children == b.children;
}

std::strong_ordering operator<=>(const PlanarForest& a, const PlanarForest& b) {
  const std::size_t n = std::min(a.trees.size(), b.trees.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.trees[i] <=> b.trees[i]; c != 0) return c;
  }
  return a.trees.size() <=> b.trees.size();
}

int degree(const PlanarTree& t) {
  int d = t.deco.degree;
  for (const auto& c : t.children) d += degree(c);
  return d;
}

int degree(const PlanarForest& f) {
  int d = 0;
  for (const auto& t : f.trees) d += degree(t);
  return d;
}

int vertex_count(const PlanarTree& t) {
  int n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

int vertex_count(const PlanarForest& f) {
  int n = 0;
  for (const auto& t : f.trees) n += vertex_count(t);
  return n;
}

namespace {

void write_tree(const PlanarTree& t, std::string& out) {
  out += symbol_name(t.deco);
  out += '[';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ' ';
    write_tree(t.children[i], out);
  }
  out += ']';
}

class PlanarParser {
 public:
  PlanarParser(std::string_view text, const GradedAlphabet* alphabet) : text_(text), alphabet_(alphabet) {}

  PlanarForest parse() {
    skip_ws();
    PlanarForest f;
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) fail("unexpected input after the unit forest");
      return f;
    }
    while (pos_ < text_.size()) {
      f.trees.push_back(tree());
      skip_ws();
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("planar forest: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int number() {
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }

  PlanarTree tree() {
    PlanarTree t;
    if (pos_ < text_.size() && text_[pos_] == 'd') {
      ++pos_;
      t.deco.degree = number();
      if (pos_ >= text_.size() || text_[pos_] != '_') fail("expected '_' in decoration");
      ++pos_;
      t.deco.index = number();
      if (t.deco.degree < 1) fail("decoration degree must be positive");
    }
    if (alphabet_ && !alphabet_->contains(t.deco)) fail("decoration outside the alphabet");
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '['");
    ++pos_;
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] != ']') {
      t.children.push_back(tree());
      skip_ws();
    }
    if (pos_ >= text_.size()) fail("unbalanced '['");
    ++pos_;
    return t;
  }

  std::string_view text_;
  const GradedAlphabet* alphabet_;
  std::size_t pos_ = 0;
};

void flatten_into(const PlanarTree& t, int parent, FlatPlanar& out) {
  out.parent.push_back(parent);
  out.deco.push_back(t.deco);
  out.subtree_end.push_back(0);
  const int self = out.size();
  for (const auto& c : t.children) flatten_into(c, self, out);
  out.subtree_end[static_cast<std::size_t>(self - 1)] = out.size();
}

PlanarTree& rightmost_leaf(PlanarForest& f) {
  PlanarTree* t = &f.trees.back();
  while (!t->children.empty()) t = &t->children.back();
  return *t;
}

void check_vertex(int v, int n) {
  if (v < 1 || v > n) throw DomainError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
}

}  // namespace

std::string to_string(const PlanarTree& t) {
  std::string out;
  write_tree(t, out);
  return out;
}

std::string to_string(const PlanarForest& f) {
  if (f.trees.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    write_tree(f.trees[i], out);
  }
  return out;
}

PlanarForest parse_planar(std::string_view text, const GradedAlphabet* alphabet) {
  return PlanarParser(text, alphabet).parse();
}

PlanarForest single(PlanarTree t) {
  PlanarForest f;
  f.trees.push_back(std::move(t));
  return f;
}

PlanarTree leaf(Decoration d) { return PlanarTree{d, {}}; }

PlanarTree ladder_tree(int n) {
  if (n < 1) throw DomainError("ladder needs at least one vertex");
  PlanarTree t = leaf();
  for (int i = 1; i < n; ++i) t = PlanarTree{{}, {std::move(t)}};
  return t;
}

PlanarTree corolla_tree(int n) {
  if (n < 1) throw DomainError("corolla needs at least one vertex");
  return PlanarTree{{}, std::vector<PlanarTree>(static_cast<std::size_t>(n - 1), leaf())};
}

FlatPlanar flatten(const PlanarForest& f) {
  FlatPlanar out;
  for (const auto& t : f.trees) flatten_into(t, 0, out);
  return out;
}

PlanarForest induced(const FlatPlanar& flat, const std::vector<char>& keep) {
  const int n = flat.size();
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n + 1));
  for (int v = 1; v <= n; ++v) {
    if (!keep[static_cast<std::size_t>(v - 1)]) continue;
    int p = flat.parent[static_cast<std::size_t>(v - 1)];
    if (p != 0 && !keep[static_cast<std::size_t>(p - 1)]) p = 0;
    kids[static_cast<std::size_t>(p)].push_back(v);
  }
  std::function<PlanarTree(int)> build = [&](int v) {
    PlanarTree t{flat.deco[static_cast<std::size_t>(v - 1)], {}};
    for (int c : kids[static_cast<std::size_t>(v)]) t.children.push_back(build(c));
    return t;
  };
  PlanarForest out;
  for (int r : kids[0]) out.trees.push_back(build(r));
  return out;
}

bool path_reaches(const PlanarForest& f, int v, int w) {
  FlatPlanar flat = flatten(f);
  check_vertex(v, flat.size());
  check_vertex(w, flat.size());
  for (int x = v; x != 0; x = flat.parent[static_cast<std::size_t>(x - 1)]) {
    if (x == w) return true;
  }
  return false;
}

std::vector<PlanarCut> admissible_cuts(const PlanarForest& f) {
  FlatPlanar flat = flatten(f);
  std::vector<PlanarCut> out;
  for_each_antichain(flat, [&](const std::vector<char>& mask) {
    PlanarCut cut;
    std::vector<char> lea(mask.size(), 0);
    for (int v = 1; v <= flat.size(); ++v) {
      if (!mask[static_cast<std::size_t>(v - 1)]) continue;
      cut.vertices.push_back(v);
      for (int w = v; w <= flat.subtree_end[static_cast<std::size_t>(v - 1)]; ++w) lea[static_cast<std::size_t>(w - 1)] = 1;
    }
    std::vector<char> roo(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) roo[i] = !lea[i];
    cut.lea = induced(flat, lea);
    cut.roo = induced(flat, roo);
    out.push_back(std::move(cut));
  });
  return out;
}

PlanarForest concat(const PlanarForest& f, const PlanarForest& g) {
  PlanarForest out = f;
  out.trees.insert(out.trees.end(), g.trees.begin(), g.trees.end());
  return out;
}

PlanarForest graft_rightmost(const PlanarForest& f, const PlanarForest& g) {
  if (f.empty() || g.empty()) throw DomainError("grafting needs two non-empty forests");
  PlanarForest out = f;
  auto& r = rightmost_leaf(out);
  r.children = g.trees;
  return out;
}

PlanarTree bplus(const PlanarForest& f, Decoration d) { return PlanarTree{d, f.trees}; }

std::uint64_t forest_factorial(const PlanarForest& f) {
  FlatPlanar flat = flatten(f);
  std::uint64_t out = 1;
  for (int v = 1; v <= flat.size(); ++v) {
    auto size = static_cast<std::uint64_t>(flat.subtree_end[static_cast<std::size_t>(v - 1)] - v + 1);
    if (out > std::numeric_limits<std::uint64_t>::max() / size) throw DomainError("forest factorial overflows 64 bits");
    out *= size;
  }
  return out;
}

namespace {

// Rebuilds g with the trees of f inserted at the chosen gaps. Gaps are
// numbered by a traversal that, at every vertex (and at root level), visits
// gap 0, child 1, gap 1, child 2, ..., gap c. The numbering matches the
// preorder position an inserted root would take in the result.
class GraftBuilder {
 public:
  GraftBuilder(const PlanarForest& f, const std::vector<int>& gaps) : f_(f), gaps_(gaps) {}

  struct Level {
    std::vector<PlanarTree> trees;
    bool last_from_f = false;
    bool rightmost_leaf_from_f = false;
  };

  Level build(const std::vector<PlanarTree>& kids) {
    Level out;
    for (std::size_t i = 0; i <= kids.size(); ++i) {
      const int id = counter_++;
      while (next_ < gaps_.size() && gaps_[next_] == id) {
        out.trees.push_back(f_.trees[next_++]);
        out.last_from_f = true;
        out.rightmost_leaf_from_f = true;
      }
      if (i < kids.size()) {
        Level sub = build(kids[i].children);
        out.trees.push_back(PlanarTree{kids[i].deco, std::move(sub.trees)});
        out.last_from_f = false;
        out.rightmost_leaf_from_f = !out.trees.back().children.empty() && sub.rightmost_leaf_from_f;
      }
    }
    return out;
  }

 private:
  const PlanarForest& f_;
  const std::vector<int>& gaps_;
  int counter_ = 0;
  std::size_t next_ = 0;
};

}  // namespace

std::vector<Grafting> graftings(const PlanarForest& f, const PlanarForest& g) {
  if (f.empty() || g.empty()) throw DomainError("grafting needs two non-empty forests");
  const int total_gaps = 2 * vertex_count(g) + 1;
  const std::size_t k = f.trees.size();
  std::vector<Grafting> out;
  std::vector<int> gaps(k, 0);
  // Weakly increasing gap sequences: trees of f keep their relative order.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int lo) {
    if (i == k) {
      GraftBuilder builder(f, gaps);
      auto level = builder.build(g.trees);
      out.push_back(Grafting{PlanarForest{std::move(level.trees)}, level.last_from_f, level.rightmost_leaf_from_f});
      return;
    }
    for (int p = lo; p < total_gaps; ++p) {
      gaps[i] = p;
      rec(i + 1, p);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<PlanarForest> enumerate_planar(int n, const GradedAlphabet& alphabet) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<std::vector<PlanarForest>> forests(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<PlanarTree>> trees(static_cast<std::size_t>(n + 1));
  forests[0].push_back(PlanarForest{});
  for (int d = 1; d <= n; ++d) {
    for (int e = 1; e <= d; ++e) {
      for (const auto& sym : alphabet.symbols_of_degree(e)) {
        for (const auto& below : forests[static_cast<std::size_t>(d - e)]) trees[static_cast<std::size_t>(d)].push_back(bplus(below, sym));
      }
    }
    for (int j = 1; j <= d; ++j) {
      for (const auto& t : trees[static_cast<std::size_t>(j)]) {
        for (const auto& rest : forests[static_cast<std::size_t>(d - j)]) {
          PlanarForest f;
          f.trees.reserve(rest.trees.size() + 1);
          f.trees.push_back(t);
          f.trees.insert(f.trees.end(), rest.trees.begin(), rest.trees.end());
          forests[static_cast<std::size_t>(d)].push_back(std::move(f));
        }
      }
    }
  }
  auto& result = forests[static_cast<std::size_t>(n)];
  std::vector<std::pair<std::string, PlanarForest>> tagged;
  tagged.reserve(result.size());
  for (auto& f : result) tagged.emplace_back(to_string(f), std::move(f));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PlanarForest> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

}  // namespace hopflab::forests
