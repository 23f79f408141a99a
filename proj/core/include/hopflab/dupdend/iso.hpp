#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopflab/dupdend/morphism.hpp"
#include "hopflab/dupdend/primitives.hpp"
#include "hopflab/hopf/algebras.hpp"

namespace hopflab::dupdend {

/// Renames every decoration through `matching`; decorations missing from
/// the map are kept.
PlanarForest relabel_decorations(const PlanarForest& f, const std::map<Decoration, Decoration>& matching);

/// The isomorphism from a decorated planar forest algebra onto a carrier,
/// up to a truncation degree. Decoration (d, i) names the i-th totally
/// primitive basis element of degree d.
template <class C>
struct IsoCertificate {
  using Key = KeyOf<C>;

  std::string carrier;
  int degree = 0;
  GradedAlphabet alphabet;
  std::vector<std::vector<LinComb<Key>>> primitives;  // index = degree
  GradedMap<PlanarForest, Key> phi;
  std::optional<GradedMap<Key, PlanarForest>> phi_inverse;
  std::vector<LawReport> laws;

  bool full_rank() const { return phi_inverse.has_value(); }
  bool passed() const { return full_rank() && hopf::all_passed(laws); }
  /// Number of generators in degrees 1..degree.
  std::vector<int> alphabet_sizes() const {
    std::vector<int> out;
    for (int d = 1; d <= degree; ++d) out.push_back(alphabet.count(d));
    return out;
  }
};

/// Computes the totally primitive elements of each degree <= n, names one
/// decoration per basis element, builds phi by free_duplicial_morphism and
/// inverts it degreewise. With check_laws the certificate also records
/// whether phi respects both products and both split coproducts.
template <class C>
IsoCertificate<C> build_isomorphism(const C& carrier, int n, bool check_laws = true, unsigned jobs = 1) {
  using Key = KeyOf<C>;
  IsoCertificate<C> cert;
  cert.carrier = carrier.name();
  cert.degree = n;
  cert.primitives.resize(static_cast<std::size_t>(n + 1));
  std::vector<int> counts{0};
  std::map<Decoration, LinComb<Key>> images;
  for (int d = 1; d <= n; ++d) {
    cert.primitives[static_cast<std::size_t>(d)] = prim_tot(carrier, d);
    const auto& prims = cert.primitives[static_cast<std::size_t>(d)];
    counts.push_back(static_cast<int>(prims.size()));
    for (std::size_t i = 0; i < prims.size(); ++i) images[Decoration{d, static_cast<int>(i)}] = prims[i];
  }
  cert.alphabet = GradedAlphabet(counts);
  cert.phi = free_duplicial_morphism(carrier, cert.alphabet, images, n);
  cert.laws.push_back(check_bijective(cert.phi, n));
  if (cert.laws.back().passed()) cert.phi_inverse = cert.phi.inverse();
  if (check_laws) {
    hopf::PlanarAlgebra source(cert.alphabet);
    for (auto& r : verify_dupdend_morphism(cert.phi, source, carrier, n, jobs)) cert.laws.push_back(std::move(r));
  }
  return cert;
}

/// psi = phi_b o relabel o phi_a^-1, where relabel renames decorations of
/// a's alphabet to b's. The default matching pairs (d, i) with (d, i).
/// Throws DomainError when the alphabets differ in size in some degree,
/// when a is not invertible, or when the matching is not degree-preserving.
template <class CA, class CB>
GradedMap<KeyOf<CA>, KeyOf<CB>> compose_isomorphism(const IsoCertificate<CA>& a, const IsoCertificate<CB>& b,
                                                   const std::map<Decoration, Decoration>& matching = {}) {
  const int n = std::min(a.degree, b.degree);
  for (int d = 1; d <= n; ++d) {
    if (a.alphabet.count(d) != b.alphabet.count(d)) {
      throw DomainError("generator counts differ in degree " + std::to_string(d));
    }
  }
  for (const auto& [from, to] : matching) {
    if (from.degree != to.degree || !a.alphabet.contains(from) || !b.alphabet.contains(to)) {
      throw DomainError("matching must pair generators of equal degree");
    }
  }
  if (!a.phi_inverse) throw DomainError("source certificate is not invertible");
  GradedMap<KeyOf<CA>, KeyOf<CB>> out;
  for (int d = 1; d <= n; ++d) {
    const auto& block = a.phi_inverse->block(d);
    out.set_block_from(d, block.source, b.phi.block(d).target, [&](const KeyOf<CA>& k) {
      auto forests_part = a.phi_inverse->apply(k);
      LinComb<PlanarForest> renamed;
      for (const auto& [f, c] : forests_part) renamed.add(relabel_decorations(f, matching), c);
      return b.phi.apply(renamed);
    });
  }
  return out;
}

/// A random degreewise invertible map between two algebras with equal
/// graded dimensions: a permuted unit lower-triangular times unit
/// upper-triangular integer matrix in each degree.
template <class S, class T>
GradedMap<KeyOf<S>, KeyOf<T>> random_invertible_map(const S& src, const T& tgt, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> small(-2, 2);
  GradedMap<KeyOf<S>, KeyOf<T>> out;
  for (int d = 1; d <= n; ++d) {
    auto sb = src.basis(d);
    auto tb = tgt.basis(d);
    if (sb.size() != tb.size()) throw DomainError("dimensions differ in degree " + std::to_string(d));
    const std::size_t m = sb.size();
    exact::Matrix lower = exact::Matrix::identity(m), upper = exact::Matrix::identity(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) lower.set(i, j, small(rng));
      for (std::size_t j = i + 1; j < m; ++j) upper.set(i, j, small(rng));
    }
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    exact::Matrix p(m, m);
    for (std::size_t i = 0; i < m; ++i) p.set(i, perm[i], 1);
    out.set_block(d, std::move(sb), std::move(tb), p * lower * upper);
  }
  return out;
}

}  // namespace hopflab::dupdend
