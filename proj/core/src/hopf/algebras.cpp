#include "hopflab/hopf/algebras.hpp"

#include "hopflab/error.hpp"

namespace hopflab::hopf {

using forests::OrderedForest;
using forests::PlanarForest;
using forests::RootedForest;

std::string to_string(Side s) { return s == Side::Prec ? "prec" : "succ"; }

LinComb<RootedForest> CKAlgebra::product(const Key& a, const Key& b) const {
  return LinComb<Key>(forests::concat(a, b));
}

Tensor<RootedForest> CKAlgebra::coproduct(const Key& k) const {
  Tensor<Key> out;
  for (auto& cut : forests::admissible_cuts(k.representative())) {
    out.add({RootedForest(cut.lea), RootedForest(cut.roo)}, 1);
  }
  return out;
}

LinComb<PlanarForest> PlanarAlgebra::product(const Key& a, const Key& b) const {
  return LinComb<Key>(forests::concat(a, b));
}

Tensor<PlanarForest> PlanarAlgebra::coproduct(const Key& k) const {
  Tensor<Key> out;
  for (auto& cut : forests::admissible_cuts(k)) out.add({std::move(cut.lea), std::move(cut.roo)}, 1);
  return out;
}

Tensor<PlanarForest> PlanarAlgebra::delta(Side side, const Key& k) const {
  if (k.empty()) throw DomainError("split coproduct is defined on the augmentation ideal only");
  const int last = forests::vertex_count(k);  // the rightmost leaf is last in preorder
  forests::FlatPlanar flat = forests::flatten(k);
  Tensor<Key> out;
  forests::for_each_antichain(flat, [&](const std::vector<char>& mask) {
    std::vector<char> lea(mask.size(), 0);
    bool any = false;
    for (int v = 1; v <= flat.size(); ++v) {
      if (!mask[static_cast<std::size_t>(v - 1)]) continue;
      any = true;
      for (int w = v; w <= flat.subtree_end[static_cast<std::size_t>(v - 1)]; ++w) lea[static_cast<std::size_t>(w - 1)] = 1;
    }
    if (!any) return;
    bool total = true;
    for (char c : lea) total = total && c;
    if (total) return;
    const bool leaf_in_lea = lea[static_cast<std::size_t>(last - 1)] != 0;
    if (leaf_in_lea != (side == Side::Prec)) return;
    std::vector<char> roo(lea.size());
    for (std::size_t i = 0; i < lea.size(); ++i) roo[i] = !lea[i];
    out.add({forests::induced(flat, lea), forests::induced(flat, roo)}, 1);
  });
  return out;
}

LinComb<PlanarForest> PlanarAlgebra::nwarrow(const Key& a, const Key& b) const {
  return LinComb<Key>(forests::graft_rightmost(a, b));
}

std::vector<OrderedForest> OrderedAlgebra::basis(int n) const {
  return heap_only_ ? forests::enumerate_heap_ordered(n) : forests::enumerate_ordered(n);
}

void OrderedAlgebra::check(const Key& k) const {
  if (heap_only_ && !forests::is_heap_ordered(k)) {
    throw DomainError("forest " + forests::to_string(k) + " is not heap-ordered");
  }
}

OrderedForest OrderedAlgebra::parse(std::string_view text) const {
  Key k = forests::parse_ordered(text);
  check(k);
  return k;
}

LinComb<OrderedForest> OrderedAlgebra::product(const Key& a, const Key& b) const {
  check(a);
  check(b);
  return LinComb<Key>(forests::concat(a, b));
}

Tensor<OrderedForest> OrderedAlgebra::coproduct(const Key& k) const {
  check(k);
  Tensor<Key> out;
  for (const auto& cut : forests::admissible_cuts(k)) {
    out.add({forests::restandardize(cut.lea), forests::restandardize(cut.roo)}, 1);
  }
  return out;
}

Tensor<OrderedForest> OrderedAlgebra::delta(Side side, const Key& k) const {
  check(k);
  if (k.empty()) throw DomainError("split coproduct is defined on the augmentation ideal only");
  const int greatest = k.size();
  Tensor<Key> out;
  for (const auto& cut : forests::admissible_cuts(k)) {
    if (cut.lea.labels.empty() || cut.roo.labels.empty()) continue;
    const bool in_lea = cut.lea.labels.back() == greatest;
    if (in_lea != (side == Side::Prec)) continue;
    out.add({forests::restandardize(cut.lea), forests::restandardize(cut.roo)}, 1);
  }
  return out;
}

LinComb<OrderedForest> OrderedAlgebra::nwarrow(const Key& a, const Key& b) const {
  check(a);
  check(b);
  return LinComb<Key>(forests::graft_greatest(a, b));
}

LinComb<PlanarForest> dual_product(const PlanarForest& f, const PlanarForest& g) {
  LinComb<PlanarForest> out;
  for (auto& gr : forests::graftings(f, g)) out.add(gr.result, 1);
  return out;
}

LinComb<PlanarForest> dual_dendriform(Side side, const PlanarForest& f, const PlanarForest& g, SplitRule rule) {
  LinComb<PlanarForest> out;
  for (auto& gr : forests::graftings(f, g)) {
    const bool from_f = rule == SplitRule::LastRoot ? gr.last_root_from_f : gr.rightmost_leaf_from_f;
    if (from_f == (side == Side::Prec)) out.add(gr.result, 1);
  }
  return out;
}

}  // namespace hopflab::hopf
