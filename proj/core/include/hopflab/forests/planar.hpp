#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hopflab::forests {

/// A decoration symbol: its degree and its index among the symbols of that
/// degree. The default {1, 0} is the single generator of the undecorated
/// algebra and prints as a bare bracket pair.
struct Decoration {
  int degree = 1;
  int index = 0;

  friend auto operator<=>(const Decoration&, const Decoration&) = default;
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

/// Canonical symbol name: empty for {1, 0}, `d<degree>_<index>` otherwise.
std::string symbol_name(const Decoration& d);

/// Graded set of decorations: for each degree d >= 1, symbols d_0..d_{k-1}.
class GradedAlphabet {
 public:
  GradedAlphabet() = default;
  /// counts[d] symbols of degree d; counts[0] must be 0.
  explicit GradedAlphabet(std::vector<int> counts);

  static GradedAlphabet undecorated() { return GradedAlphabet({0, 1}); }

  int count(int degree) const;
  int max_degree() const { return static_cast<int>(counts_.size()) - 1; }
  bool contains(const Decoration& d) const;
  std::vector<Decoration> symbols_of_degree(int degree) const;
  const std::vector<int>& counts() const { return counts_; }

 private:
  std::vector<int> counts_{0};
};

struct PlanarTree {
  Decoration deco;
  std::vector<PlanarTree> children;

  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);
  friend bool operator==(const PlanarTree& a, const PlanarTree& b);
};

/// Ordered sequence of planar trees; the empty forest is the unit.
struct PlanarForest {
  std::vector<PlanarTree> trees;

  bool empty() const { return trees.empty(); }

  friend std::strong_ordering operator<=>(const PlanarForest& a, const PlanarForest& b);
  friend bool operator==(const PlanarForest& a, const PlanarForest& b) = default;
};

int degree(const PlanarTree& t);
int degree(const PlanarForest& f);
int vertex_count(const PlanarTree& t);
int vertex_count(const PlanarForest& f);

/// Nested brackets, siblings and top-level trees separated by one space,
/// e.g. `[[[]] []] []`; the empty forest prints as `1`.
std::string to_string(const PlanarTree& t);
std::string to_string(const PlanarForest& f);

/// Inverse of to_string. Whitespace between trees is optional inside a
/// bracket and required nowhere; `1` (or an empty string) is the empty
/// forest. Decorated nodes use `d<degree>_<index>[...]`; when `alphabet` is
/// given every decoration must belong to it. Throws ParseError.
PlanarForest parse_planar(std::string_view text, const GradedAlphabet* alphabet = nullptr);

/// Single-tree forest helpers.
PlanarForest single(PlanarTree t);
PlanarTree leaf(Decoration d = {});
PlanarTree ladder_tree(int n);
PlanarTree corolla_tree(int n);

/// Preorder flattening. Vertices are numbered 1..n in preorder (the order
/// of their opening brackets); parent 0 marks a root.
struct FlatPlanar {
  std::vector<int> parent;           // parent[v-1]
  std::vector<Decoration> deco;      // deco[v-1]
  std::vector<int> subtree_end;      // last preorder index inside v's subtree
  int size() const { return static_cast<int>(parent.size()); }
};

FlatPlanar flatten(const PlanarForest& f);

/// Planar forest induced on the vertices with keep[v-1] set. A kept vertex
/// whose parent is not kept becomes a root. Sibling and root order follow
/// preorder.
PlanarForest induced(const FlatPlanar& flat, const std::vector<char>& keep);

/// True iff w lies on the root-directed path from v (reflexive). Vertices
/// are preorder indices. Throws DomainError when out of range.
bool path_reaches(const PlanarForest& f, int v, int w);

struct PlanarCut {
  std::vector<int> vertices;  // the antichain, ascending preorder indices
  PlanarForest lea;
  PlanarForest roo;
};

/// Every admissible cut, the empty and total cuts included, with its Lea
/// and Roo parts in induced planar order.
std::vector<PlanarCut> admissible_cuts(const PlanarForest& f);

/// Callback form of admissible_cuts: visit(antichain_mask, flat).
template <class Visit>
void for_each_antichain(const FlatPlanar& flat, Visit&& visit);

PlanarForest concat(const PlanarForest& f, const PlanarForest& g);

/// Appends the trees of g as children of the rightmost leaf of f.
/// Throws DomainError if either forest is empty.
PlanarForest graft_rightmost(const PlanarForest& f, const PlanarForest& g);

/// New root decorated d carrying the trees of f as children.
PlanarTree bplus(const PlanarForest& f, Decoration d = {});

/// Product over vertices of the number of vertices in their subtree.
std::uint64_t forest_factorial(const PlanarForest& f);

/// One way of grafting the trees of f onto g (including at root level):
/// the forest h such that cutting the grafted copies of f's trees from h
/// gives back f (as Lea) and g (as Roo).
struct Grafting {
  PlanarForest result;
  bool last_root_from_f = false;       // h's last root belongs to f
  bool rightmost_leaf_from_f = false;  // h's rightmost leaf belongs to f
};

/// All graftings of f on g with multiplicity, in a deterministic order.
/// Throws DomainError if either forest is empty.
std::vector<Grafting> graftings(const PlanarForest& f, const PlanarForest& g);

/// Every planar forest whose decorations come from `alphabet` and whose
/// degree is n, sorted by serialization.
std::vector<PlanarForest> enumerate_planar(int n, const GradedAlphabet& alphabet = GradedAlphabet::undecorated());

// ---------------------------------------------------------------------------

template <class Visit>
void for_each_antichain(const FlatPlanar& flat, Visit&& visit) {
  const int n = flat.size();
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  // Preorder scan: choosing v skips its subtree, so no ancestor/descendant
  // pair is ever selected together.
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      visit(static_cast<const std::vector<char>&>(mask));
      return;
    }
    self(self, v + 1);
    mask[static_cast<std::size_t>(v - 1)] = 1;
    self(self, flat.subtree_end[static_cast<std::size_t>(v - 1)] + 1);
    mask[static_cast<std::size_t>(v - 1)] = 0;
  };
  rec(rec, 1);
}

}  // namespace hopflab::forests
