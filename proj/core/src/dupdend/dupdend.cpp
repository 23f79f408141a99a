#include "hopflab/dupdend/iso.hpp"

namespace hopflab::dupdend {

namespace {

forests::PlanarTree relabel_tree(const forests::PlanarTree& t, const std::map<Decoration, Decoration>& matching) {
  forests::PlanarTree out;
  auto it = matching.find(t.deco);
  out.deco = it == matching.end() ? t.deco : it->second;
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(relabel_tree(c, matching));
  return out;
}

}  // namespace

PlanarForest relabel_decorations(const PlanarForest& f, const std::map<Decoration, Decoration>& matching) {
  if (matching.empty()) return f;
  PlanarForest out;
  out.trees.reserve(f.trees.size());
  for (const auto& t : f.trees) out.trees.push_back(relabel_tree(t, matching));
  return out;
}

}  // namespace hopflab::dupdend
