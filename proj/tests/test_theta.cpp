#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "hopflab/dupdend/morphism.hpp"
#include "hopflab/hopf/algebras.hpp"
#include "hopflab/theta/laws.hpp"
#include "hopflab/theta/theta.hpp"
#include "oracles.hpp"

using namespace hopflab;
using namespace hopflab::forests;
using words::ParkingWord;

namespace {

OrderedForest of(const char* s) { return parse_ordered(s); }

std::set<ParkingWord> as_set(const std::vector<ParkingWord>& v) { return {v.begin(), v.end()}; }

// Forest on labels 1..3 from parent labels given per symbolic vertex a, b, c.
OrderedForest labeled(const std::array<int, 3>& label, const std::array<int, 3>& parent_symbol) {
  OrderedForest f{std::vector<int>(3, 0)};
  for (int i = 0; i < 3; ++i) {
    const int p = parent_symbol[static_cast<std::size_t>(i)];
    f.parent[static_cast<std::size_t>(label[static_cast<std::size_t>(i)] - 1)] =
        p < 0 ? 0 : label[static_cast<std::size_t>(p)];
  }
  return f;
}

// Words over the symbols a, b, c (0, 1, 2) instantiated with a labeling.
exact::LinComb<ParkingWord> words_of(const std::array<int, 3>& label,
                                     const std::vector<std::array<int, 3>>& symbolic) {
  exact::LinComb<ParkingWord> out;
  for (const auto& s : symbolic) {
    ParkingWord w;
    for (int x : s) w.letters.push_back(label[static_cast<std::size_t>(x)]);
    out.add(w, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("S_F is the set of linear extensions") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_ordered(n)) {
      CAPTURE(to_string(f));
      CHECK(as_set(theta::s_set(f)) == as_set(oracle::linear_extensions(f)));
      CHECK(theta::s_set(f).size() == oracle::factorial(n) / forest_factorial(f));
    }
  }
}

TEST_CASE("displayed theta values in degrees 1 and 2") {
  // [PUBLISHED]
  using L = exact::LinComb<ParkingWord>;
  auto w = [](const char* s) { return words::parse_word(s); };
  CHECK(theta::theta(of("1")) == L(w("(1)")));
  CHECK(theta::theta(of("1 2")) == L(w("(12)")) + L(w("(21)")));
  CHECK(theta::theta(of("1(2)")) == L(w("(12)")));
  CHECK(theta::theta(of("2(1)")) == L(w("(21)")));
}

TEST_CASE("displayed theta values in degree 3 for every labeling") {
  // [PUBLISHED] {a, b, c} = {1, 2, 3} in every order.
  const int a = 0, b = 1, c = 2;
  std::array<int, 3> label{1, 2, 3};
  do {
    CAPTURE(label[0]);
    CAPTURE(label[1]);
    CAPTURE(label[2]);
    CHECK(theta::theta(labeled(label, {-1, -1, -1})) ==
          words_of(label, {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}));
    CHECK(theta::theta(labeled(label, {-1, -1, b})) == words_of(label, {{a, b, c}, {b, a, c}, {b, c, a}}));
    CHECK(theta::theta(labeled(label, {-1, a, a})) == words_of(label, {{a, b, c}, {a, c, b}}));
    CHECK(theta::theta(labeled(label, {-1, a, b})) == words_of(label, {{a, b, c}}));
  } while (std::next_permutation(label.begin(), label.end()));
}

TEST_CASE("theta kills the displayed kernel element") {
  exact::LinComb<OrderedForest> x;
  x.add(of("1(2)"), 1);
  x.add(of("2(1)"), 1);
  x.add(of("1 2"), -1);
  CHECK(theta::theta(x).is_zero());
}

TEST_CASE("pairing matches the bijection oracle") {
  for (int n = 1; n <= 4; ++n) {
    const auto basis = enumerate_ordered(n);
    for (const auto& f : basis) {
      for (const auto& g : basis) {
        const auto maps = oracle::pairing_maps(f, g);
        CHECK(as_set(theta::pairing_set(f, g)) == as_set(maps));
        // S(F, G) = S_F^-1 intersected with S_G.
        std::set<ParkingWord> via_extensions;
        const auto sg = as_set(oracle::linear_extensions(g));
        for (const auto& s : oracle::linear_extensions(f)) {
          if (sg.count(oracle::inverse(s))) via_extensions.insert(oracle::inverse(s));
        }
        CHECK(via_extensions == as_set(maps));
      }
    }
  }
  CHECK(theta::pairing(of("1"), of("1 2")) == 0);
}

TEST_CASE("displayed pairing matrices") {
  // [PUBLISHED] rows and columns in the order 1 2, 1(2), 2(1).
  CHECK(theta::pairing_matrix(1) == exact::Matrix{{1}});
  const auto basis = enumerate_ordered(2);
  const std::vector<OrderedForest> shown{of("1 2"), of("1(2)"), of("2(1)")};
  const int want[3][3] = {{2, 1, 1}, {1, 1, 0}, {1, 0, 1}};
  const auto m = theta::pairing_matrix(2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto r = std::find(basis.begin(), basis.end(), shown[static_cast<std::size_t>(i)]) - basis.begin();
      auto c = std::find(basis.begin(), basis.end(), shown[static_cast<std::size_t>(j)]) - basis.begin();
      CHECK(m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) == want[i][j]);
    }
  }
}

TEST_CASE("pairing rank and kernel") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto m = theta::pairing_matrix(n);
    CHECK(exact::rank(m) == oracle::factorial(n));
    CHECK(exact::rank(theta::theta_matrix(n)) == oracle::factorial(n));
    const auto basis = enumerate_ordered(n);
    auto coords = [&](const std::vector<exact::LinComb<OrderedForest>>& xs) {
      std::vector<std::vector<exact::Scalar>> out;
      for (const auto& x : xs) {
        std::vector<exact::Scalar> v(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] = x.coefficient(basis[i]);
        out.push_back(v);
      }
      return out;
    };
    const auto kp = theta::pairing_kernel_basis(n), kt = theta::theta_kernel_basis(n);
    CHECK(kp.size() == basis.size() - oracle::factorial(n));
    CHECK(exact::same_span(coords(kp), coords(kt), basis.size()));
    for (const auto& x : kt) CHECK(theta::theta(x).is_zero());
  }
}

TEST_CASE("pairing with the all-roots forest") {
  hopf::OrderedAlgebra ho;
  for (int n = 1; n <= 4; ++n) {
    OrderedForest dots{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (const auto& f : ho.basis(n)) {
      CHECK(theta::pairing(dots, f) * forest_factorial(f) == oracle::factorial(n));
    }
  }
}

TEST_CASE("pairing and theta law suites pass") {
  hopf::OrderedAlgebra ho, hho(true);
  for (const auto& r : theta::check_pairing(ho, 4)) {
    CAPTURE(r.law);
    CHECK(r.passed());
  }
  for (const auto& r : theta::check_theta(ho, 4)) {
    CAPTURE(r.law);
    CHECK(r.passed());
  }
  for (const auto& r : theta::check_theta(hho, 4)) {
    CAPTURE(r.law);
    CHECK(r.passed());
  }
}

TEST_CASE("theta is a Hopf morphism from the opposite coproduct") {
  hopf::OrderedAlgebra ho;
  words::WordAlgebra fqsym(true), fqsym_cop(true, true);
  const auto map = theta::theta_map(4);
  CHECK(hopf::all_passed(dupdend::verify_hopf_morphism(map, ho, fqsym, 4, true)));
  CHECK(hopf::all_passed(dupdend::verify_hopf_morphism(map, ho, fqsym_cop, 4, false)));
  // Without the flip the coproduct check must fail.
  CHECK_FALSE(hopf::all_passed(dupdend::verify_hopf_morphism(map, ho, fqsym, 3, false)));
}

TEST_CASE("theta restricted to heap-ordered forests is invertible") {
  hopf::OrderedAlgebra hho(true);
  words::WordAlgebra fqsym_cop(true, true);
  const auto map = theta::theta_map(4, true);
  CHECK(map.invertible());
  CHECK(hopf::all_passed(dupdend::verify_hopf_iso(map, hho, fqsym_cop, 4)));
  CHECK_FALSE(theta::theta_map(3, false).invertible());
}
