#include "hopflab/forests/rooted.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hopflab::forests {

namespace {

void sort_by_text(std::vector<PlanarTree>& trees) {
  std::vector<std::pair<std::string, PlanarTree>> tagged;
  tagged.reserve(trees.size());
  for (auto& t : trees) tagged.emplace_back(to_string(t), std::move(t));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < trees.size(); ++i) trees[i] = std::move(tagged[i].second);
}

}  // namespace

PlanarTree canonical_tree(const PlanarTree& t) {
  PlanarTree out{t.deco, {}};
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(canonical_tree(c));
  sort_by_text(out.children);
  return out;
}

RootedForest::RootedForest(const PlanarForest& arrangement) {
  rep_.trees.reserve(arrangement.trees.size());
  for (const auto& t : arrangement.trees) rep_.trees.push_back(canonical_tree(t));
  sort_by_text(rep_.trees);
}

RootedForest parse_rooted(std::string_view text) { return RootedForest(parse_planar(text)); }

RootedForest concat(const RootedForest& f, const RootedForest& g) {
  return RootedForest(concat(f.representative(), g.representative()));
}

std::uint64_t forest_factorial(const RootedForest& f) { return forest_factorial(f.representative()); }

bool path_reaches(const RootedForest& f, int v, int w) { return path_reaches(f.representative(), v, w); }

std::vector<RootedForest> enumerate_rooted(int n) {
  std::set<std::string> seen;
  std::vector<std::pair<std::string, RootedForest>> tagged;
  for (const auto& p : enumerate_planar(n)) {
    RootedForest r(p);
    std::string key = to_string(r);
    if (seen.insert(key).second) tagged.emplace_back(std::move(key), std::move(r));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RootedForest> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

}  // namespace hopflab::forests
