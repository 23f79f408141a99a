#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopflab/forests/planar.hpp"

namespace hopflab::forests {

/// Rooted (non-planar) forest, stored as its canonical planar
/// representative: siblings and roots sorted by serialization, which makes
/// the serialization of the representative the smallest among all planar
/// arrangements.
class RootedForest {
 public:
  RootedForest() = default;
  /// Canonicalizes any planar arrangement.
  explicit RootedForest(const PlanarForest& arrangement);

  const PlanarForest& representative() const { return rep_; }
  bool empty() const { return rep_.empty(); }

  friend auto operator<=>(const RootedForest&, const RootedForest&) = default;
  friend bool operator==(const RootedForest&, const RootedForest&) = default;

 private:
  PlanarForest rep_;
};

inline int degree(const RootedForest& f) { return degree(f.representative()); }
inline std::string to_string(const RootedForest& f) { return to_string(f.representative()); }

/// Canonical tree (children sorted recursively).
PlanarTree canonical_tree(const PlanarTree& t);

/// Parses planar syntax and canonicalizes. Throws ParseError.
RootedForest parse_rooted(std::string_view text);

/// Disjoint union.
RootedForest concat(const RootedForest& f, const RootedForest& g);

std::uint64_t forest_factorial(const RootedForest& f);

/// Vertices are preorder indices of the canonical representative.
bool path_reaches(const RootedForest& f, int v, int w);

/// All rooted forests with n vertices, sorted by serialization.
std::vector<RootedForest> enumerate_rooted(int n);

}  // namespace hopflab::forests
