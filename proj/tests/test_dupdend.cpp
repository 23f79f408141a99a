#include <doctest.h>

#include <map>
#include <vector>

#include "hopflab/dupdend/iso.hpp"
#include "hopflab/dupdend/laws.hpp"
#include "hopflab/dupdend/morphism.hpp"
#include "hopflab/dupdend/primitives.hpp"
#include "hopflab/exactcore/power_series.hpp"
#include "hopflab/hopf/algebras.hpp"
#include "hopflab/hopf/corrupt.hpp"
#include "hopflab/words/words.hpp"
#include "oracles.hpp"

using namespace hopflab;
using namespace hopflab::forests;
using dupdend::SplitStep;
using hopf::Side;

namespace {

template <class A>
std::vector<hopf::LawReport> dupdend_laws(const A& alg, int n) {
  std::vector<hopf::LawReport> out;
  for (auto& r : dupdend::check_duplicial(alg, n)) out.push_back(r);
  for (auto& r : dupdend::check_dendriform_coalgebra(alg, n)) out.push_back(r);
  for (auto& r : dupdend::check_compatibilities(alg, n)) out.push_back(r);
  out.push_back(hopf::check_split_sum(alg, n));
  return out;
}

template <class A>
void require_dupdend(const A& alg, int n) {
  for (const auto& r : dupdend_laws(alg, n)) {
    CAPTURE(alg.name());
    CAPTURE(r.law);
    CHECK(r.passed());
  }
}

template <class A>
std::vector<int> prim_dims(const A& alg, int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) out.push_back(static_cast<int>(dupdend::prim_tot(alg, d).size()));
  return out;
}

template <class K>
exact::LinComb<K> lc(const K& k) {
  return exact::LinComb<K>(k);
}

}  // namespace

TEST_CASE("two-product and split laws hold up to degree 4") {
  require_dupdend(hopf::PlanarAlgebra{}, 4);
  require_dupdend(hopf::PlanarAlgebra{GradedAlphabet({0, 1, 1})}, 4);
  require_dupdend(hopf::OrderedAlgebra{}, 4);
  require_dupdend(hopf::OrderedAlgebra{true}, 4);
  require_dupdend(words::WordAlgebra{false, true}, 4);
  require_dupdend(words::WordAlgebra{true, true}, 4);
}

TEST_CASE("seeded corruptions break the two-product laws") {
  hopf::OrderedAlgebra ho;
  for (unsigned seed : {1u, 5u}) {
    auto graft = hopf::make_corrupted(ho, hopf::CorruptOp::Nwarrow, seed);
    CHECK_FALSE(hopf::all_passed(dupdend::check_duplicial(graft, 4)));
    auto split = hopf::make_corrupted(ho, hopf::CorruptOp::DeltaPrec, seed);
    CHECK_FALSE(hopf::all_passed(dupdend_laws(split, 4)));
  }
  words::WordAlgebra cop(false, true);
  CHECK_FALSE(hopf::all_passed(dupdend_laws(hopf::make_corrupted(cop, hopf::CorruptOp::DeltaSucc, 2), 4)));
}

TEST_CASE("totally primitive dimensions") {
  CHECK(prim_dims(hopf::OrderedAlgebra{}, 5) == std::vector<int>{1, 1, 7, 66, 786});
  CHECK(prim_dims(hopf::OrderedAlgebra{true}, 5) == std::vector<int>{1, 0, 1, 6, 39});
  CHECK(prim_dims(words::WordAlgebra{false, true}, 4) == std::vector<int>{1, 1, 7, 66});
  CHECK(prim_dims(words::WordAlgebra{true, true}, 4) == std::vector<int>{1, 0, 1, 6});
  CHECK(prim_dims(hopf::PlanarAlgebra{}, 4) == std::vector<int>{1, 0, 0, 0});
  CHECK(prim_dims(hopf::PlanarAlgebra{GradedAlphabet({0, 2, 1, 3})}, 3) == std::vector<int>{2, 1, 3});
  CHECK_THROWS_AS(dupdend::prim_tot(hopf::OrderedAlgebra{}, 0), DomainError);
}

TEST_CASE("totally primitive elements are independent and killed by both splits") {
  hopf::OrderedAlgebra ho;
  for (int d = 1; d <= 4; ++d) {
    const auto prims = dupdend::prim_tot(ho, d);
    const auto basis = ho.basis(d);
    std::vector<std::vector<exact::Scalar>> rows;
    for (const auto& x : prims) {
      CHECK(hopf::delta(ho, Side::Prec, x).is_zero());
      CHECK(hopf::delta(ho, Side::Succ, x).is_zero());
      std::vector<exact::Scalar> v;
      for (const auto& f : basis) v.push_back(x.coefficient(f));
      rows.push_back(v);
    }
    CHECK(oracle::rank(rows) == prims.size());
  }
}

TEST_CASE("linear algebra and generating functions agree on the alphabet sizes") {
  auto alphabet_from = [](const std::vector<exact::Scalar>& dims) {
    return exact::series_to_alphabet(exact::PowerSeries(dims, 5), 5);
  };
  std::vector<exact::Scalar> ordered{1}, heap{1};
  for (int n = 1; n <= 5; ++n) {
    ordered.push_back(exact::Scalar(exact::BigInt(oracle::cayley_forests(n))));
    heap.push_back(exact::Scalar(exact::BigInt(oracle::factorial(n))));
  }
  const auto a = alphabet_from(ordered), b = alphabet_from(heap);
  const auto pa = prim_dims(hopf::OrderedAlgebra{}, 5), pb = prim_dims(hopf::OrderedAlgebra{true}, 5);
  for (int d = 1; d <= 5; ++d) {
    CHECK(a[static_cast<std::size_t>(d)] == pa[static_cast<std::size_t>(d - 1)]);
    CHECK(b[static_cast<std::size_t>(d)] == pb[static_cast<std::size_t>(d - 1)]);
  }
}

TEST_CASE("iterated split coproducts add up to the iterated reduced coproduct") {
  hopf::PlanarAlgebra hp;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : hp.basis(n)) {
      dupdend::TensorN<PlanarForest> by_steps;
      for (Side s1 : {Side::Prec, Side::Succ}) {
        for (Side s2 : {Side::Prec, Side::Succ}) {
          by_steps += dupdend::iterated_coproduct(hp, {SplitStep{s1, 0}, SplitStep{s2, 0}}, lc(f));
        }
      }
      dupdend::TensorN<PlanarForest> direct;
      for (const auto& [t, c] : hopf::reduced_coproduct(hp, f)) {
        for (const auto& [u, e] : hopf::reduced_coproduct(hp, t.first)) {
          direct.add({u.first, u.second, t.second}, c * e);
        }
      }
      CHECK(by_steps == direct);
    }
  }
  CHECK_THROWS_AS(dupdend::iterated_coproduct(hp, {SplitStep{Side::Prec, 3}}, lc(parse_planar("[[]]"))),
                  DomainError);
  CHECK_THROWS_AS(dupdend::iterated_coproduct(hp, {}, lc(PlanarForest{})), DomainError);
}

TEST_CASE("deg_p counts vertices on forests and is 1 on primitives") {
  hopf::PlanarAlgebra hp(GradedAlphabet({0, 1, 1}));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : hp.basis(n)) CHECK(dupdend::deg_p(hp, lc(f)) == vertex_count(f));
  }
  hopf::OrderedAlgebra ho;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : ho.basis(n)) CHECK(dupdend::deg_p(ho, lc(f)) == n);
    for (const auto& x : dupdend::prim_tot(ho, n)) CHECK(dupdend::deg_p(ho, x) == 1);
  }
  CHECK_THROWS_AS(dupdend::deg_p(ho, exact::LinComb<OrderedForest>{}), DomainError);
}

TEST_CASE("free morphism on one generator") {
  hopf::OrderedAlgebra ho;
  const auto alpha = GradedAlphabet::undecorated();
  std::map<Decoration, exact::LinComb<OrderedForest>> images{{Decoration{}, lc(parse_ordered("1"))}};
  const auto phi = dupdend::free_duplicial_morphism(ho, alpha, images, 3);
  CHECK(phi.apply(parse_planar("[[]]")) == lc(parse_ordered("1(2)")));
  CHECK(phi.apply(parse_planar("[[] []]")) == lc(parse_ordered("1(2,3)")));
  CHECK(phi.apply(parse_planar("[] [[]]")) == lc(parse_ordered("1 2(3)")));
  CHECK(hopf::all_passed(dupdend::verify_dupdend_morphism(phi, hopf::PlanarAlgebra{}, ho, 3)));
  std::map<Decoration, exact::LinComb<OrderedForest>> wrong{{Decoration{}, lc(parse_ordered("1 2"))}};
  CHECK_THROWS_AS(dupdend::free_duplicial_morphism(ho, alpha, wrong, 2), DomainError);
  CHECK_THROWS_AS(dupdend::free_duplicial_morphism(ho, alpha, {}, 2), DomainError);
}

TEST_CASE("relabeling decorations") {
  std::map<Decoration, Decoration> swap{{{2, 0}, {2, 1}}, {{2, 1}, {2, 0}}};
  GradedAlphabet alpha({0, 1, 2});
  auto f = parse_planar("d2_0[d2_1[] []]", &alpha);
  CHECK(to_string(dupdend::relabel_decorations(f, swap)) == "d2_1[d2_0[] []]");
}

TEST_CASE("isomorphism certificates for ordered forests and parking words") {
  const auto a = dupdend::build_isomorphism(hopf::OrderedAlgebra{}, 4);
  CHECK(a.full_rank());
  CHECK(a.passed());
  CHECK(a.alphabet_sizes() == std::vector<int>{1, 1, 7, 66});
  const auto b = dupdend::build_isomorphism(words::WordAlgebra{false, true}, 4);
  CHECK(b.full_rank());
  CHECK(b.passed());
  const auto h = dupdend::build_isomorphism(hopf::OrderedAlgebra{true}, 4);
  CHECK(h.passed());
  CHECK(h.alphabet_sizes() == std::vector<int>{1, 0, 1, 6});
}

TEST_CASE("composed map from ordered forests to parking words") {
  hopf::OrderedAlgebra ho;
  words::WordAlgebra pqsym(false), pqsym_cop(false, true);
  const auto a = dupdend::build_isomorphism(ho, 3, false);
  const auto b = dupdend::build_isomorphism(pqsym_cop, 3, false);
  const auto psi = dupdend::compose_isomorphism(a, b);
  CHECK(psi.block(3).matrix.rows() == 16);
  CHECK(exact::rank(psi.block(3).matrix) == 16);
  CHECK(hopf::all_passed(dupdend::verify_hopf_iso(psi, ho, pqsym_cop, 3)));

  // Any degree-preserving renaming of generators gives another isomorphism.
  std::map<Decoration, Decoration> swap{{{3, 0}, {3, 6}}, {{3, 6}, {3, 0}}};
  const auto psi2 = dupdend::compose_isomorphism(a, b, swap);
  CHECK_FALSE(psi2.block(3).matrix == psi.block(3).matrix);
  CHECK(hopf::all_passed(dupdend::verify_hopf_iso(psi2, ho, pqsym_cop, 3)));

  // psi o S o rev is a Hopf morphism into the plain (not opposite) carrier.
  hopf::Antipode<hopf::OrderedAlgebra> antipode(ho);
  exact::GradedMap<OrderedForest, words::ParkingWord> twisted;
  for (int d = 1; d <= 3; ++d) {
    twisted.set_block_from(d, ho.basis(d), pqsym.basis(d),
                           [&](const OrderedForest& f) { return psi.apply(antipode(reverse_labels(f))); });
  }
  CHECK(hopf::all_passed(dupdend::verify_hopf_morphism(twisted, ho, pqsym, 3)));
  CHECK_FALSE(hopf::all_passed(dupdend::verify_hopf_morphism(psi, ho, pqsym, 3)));
}

TEST_CASE("composition rejects mismatched alphabets") {
  const auto a = dupdend::build_isomorphism(hopf::OrderedAlgebra{}, 3, false);
  const auto h = dupdend::build_isomorphism(words::WordAlgebra{true, true}, 3, false);
  CHECK_THROWS_AS(dupdend::compose_isomorphism(a, h), DomainError);
  const auto b = dupdend::build_isomorphism(words::WordAlgebra{false, true}, 3, false);
  std::map<Decoration, Decoration> bad{{{3, 0}, {2, 0}}};
  CHECK_THROWS_AS(dupdend::compose_isomorphism(a, b, bad), DomainError);
}

TEST_CASE("a random invertible map is not an isomorphism") {
  hopf::OrderedAlgebra ho;
  words::WordAlgebra pqsym_cop(false, true);
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto r = dupdend::random_invertible_map(ho, pqsym_cop, 3, seed);
    CHECK(r.invertible());
    CHECK_FALSE(hopf::all_passed(dupdend::verify_hopf_iso(r, ho, pqsym_cop, 3)));
  }
  CHECK_THROWS_AS(dupdend::random_invertible_map(hopf::OrderedAlgebra{true}, pqsym_cop, 2, 1), DomainError);
}
