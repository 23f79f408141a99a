#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopflab/forests/planar.hpp"

namespace hopflab::forests {

/// Rooted forest on the labels 1..n, ordered by label. parent[i-1] is the
/// parent label of i, 0 when i is a root.
struct OrderedForest {
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }
  bool empty() const { return parent.empty(); }
  int parent_of(int label) const { return parent[static_cast<std::size_t>(label - 1)]; }

  friend auto operator<=>(const OrderedForest&, const OrderedForest&) = default;
  friend bool operator==(const OrderedForest&, const OrderedForest&) = default;
};

inline int degree(const OrderedForest& f) { return f.size(); }

/// Throws DomainError unless the parent map is well formed and acyclic.
void validate(const OrderedForest& f);

/// Roots in increasing order, each tree as `label` or
/// `label(child,child,...)` with children increasing; e.g. `1 2(3)` or
/// `1(2(3,4))`. The empty forest prints as `()`.
std::string to_string(const OrderedForest& f);

/// Inverse of to_string; siblings may be listed in any order. Labels must
/// be exactly 1..n. Throws ParseError.
OrderedForest parse_ordered(std::string_view text);

/// Forest on an arbitrary set of distinct positive labels, as produced by
/// cutting. parents[i] is the parent label of labels[i] (0 for a root).
struct LabeledForest {
  std::vector<int> labels;
  std::vector<int> parents;
};

/// Relabels through the unique increasing bijection onto 1..k. Throws
/// DomainError on duplicate labels or dangling parents.
OrderedForest restandardize(const LabeledForest& part);

bool is_heap_ordered(const OrderedForest& f);

/// True iff w lies on the root-directed path from v (reflexive).
bool path_reaches(const OrderedForest& f, int v, int w);

/// The planar forest obtained by listing roots and siblings by label.
PlanarForest planar_view(const OrderedForest& f);

struct OrderedCut {
  std::vector<int> vertices;  // ascending labels
  LabeledForest lea;
  LabeledForest roo;
};

/// Every admissible cut (empty and total included), parts not restandardized.
std::vector<OrderedCut> admissible_cuts(const OrderedForest& f);

/// Shifted concatenation: labels of g move past those of f.
OrderedForest concat(const OrderedForest& f, const OrderedForest& g);

/// Grafts g (shifted past f) on the greatest vertex of f. Throws DomainError
/// if either forest is empty.
OrderedForest graft_greatest(const OrderedForest& f, const OrderedForest& g);

std::uint64_t forest_factorial(const OrderedForest& f);

/// Label i becomes n+1-i.
OrderedForest reverse_labels(const OrderedForest& f);

/// Subtree sizes by label.
std::vector<int> subtree_sizes(const OrderedForest& f);

/// All ordered forests of degree n, sorted by serialization.
std::vector<OrderedForest> enumerate_ordered(int n);

/// All heap-ordered forests of degree n, sorted by serialization.
std::vector<OrderedForest> enumerate_heap_ordered(int n);

}  // namespace hopflab::forests
