#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/exactcore/graded_map.hpp"
#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/exactcore/matrix.hpp"
#include "hopflab/exactcore/parallel.hpp"
#include "hopflab/exactcore/power_series.hpp"
#include "hopflab/exactcore/scalar.hpp"
#include "oracles.hpp"

using namespace hopflab;
using exact::LinComb;
using exact::Matrix;
using exact::PowerSeries;
using exact::Scalar;

namespace {

// Plain string keys so the tests do not depend on any algebra.
struct Key {
  std::string name;
  friend auto operator<=>(const Key&, const Key&) = default;
};
std::string to_string(const Key& k) { return k.name; }

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (keep(rng) < density) m.set(i, j, val(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays in lowest terms") {
  Scalar a(exact::BigInt(6), exact::BigInt(-4));
  CHECK(a.str() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK((a + Scalar(3) / 2).is_zero());
  CHECK((Scalar(1) / 3 + Scalar(1) / 6).str() == "1/2");
  CHECK(Scalar::parse("-10/4") == Scalar(-5) / 2);
  CHECK(Scalar::parse("7").is_integer());
  CHECK(Scalar(2) / 3 < Scalar(3) / 4);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
  CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("scalars do not overflow") {
  Scalar f = 1;
  for (int i = 2; i <= 30; ++i) f *= i;
  CHECK(f.str() == "265252859812191058636308480000000");
}

TEST_CASE("linear combinations drop cancelled terms") {
  LinComb<Key> x(Key{"a"}, 2);
  x.add(Key{"b"}, -1);
  x.add(Key{"a"}, -2);
  CHECK(x.size() == 1);
  CHECK_FALSE(x.contains(Key{"a"}));
  CHECK(x.coefficient(Key{"b"}) == -1);
  CHECK((x - x).is_zero());
  CHECK(to_string(LinComb<Key>{}) == "0");
}

TEST_CASE("linear combinations print sorted and parse back") {
  LinComb<Key> x;
  x.add(Key{"b"}, Scalar(1) / 2);
  x.add(Key{"a"}, -1);
  x.add(Key{"c"}, 3);
  const std::string text = to_string(x);
  CHECK(text == "-a + 1/2*b + 3*c");
  auto back = exact::parse_lincomb<Key>(text, [](std::string_view s) { return Key{std::string(s)}; });
  CHECK(back == x);
  auto nested = exact::parse_lincomb<Key>("2*(1,2) - [[] []]", [](std::string_view s) { return Key{std::string(s)}; });
  CHECK(nested.coefficient(Key{"(1,2)"}) == 2);
  CHECK(nested.coefficient(Key{"[[] []]"}) == -1);
  CHECK_THROWS_AS(exact::parse_lincomb<Key>("a + ", [](std::string_view s) { return Key{std::string(s)}; }),
                  ParseError);
}

TEST_CASE("tensors flip and format") {
  exact::Tensor<Key> t;
  t.add({Key{"x"}, Key{"y"}}, 2);
  CHECK(to_string(t) == "2*x (x) y");
  CHECK(exact::flip(t).coefficient({Key{"y"}, Key{"x"}}) == 2);
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    Matrix m = random_matrix(rng, r, c, 1 + trial % 9);
    CHECK(exact::rank(m) == oracle::rank(m.to_dense()));
  }
}

TEST_CASE("kernel vectors are killed and rank plus nullity is the column count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
    Matrix m = random_matrix(rng, r, c, 4);
    auto kernel = exact::kernel_basis(m);
    CHECK(exact::rank(m) + kernel.size() == c);
    for (const auto& v : kernel) {
      for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
    }
    CHECK(exact::rank_of_rows(kernel, c) == kernel.size());
  }
}

TEST_CASE("inverse of a unimodular matrix") {
  Matrix a{{2, 1, 0}, {1, 1, 0}, {0, 3, 1}};
  auto inv = exact::inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(3));
  CHECK_FALSE(exact::inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("span comparison") {
  std::vector<std::vector<Scalar>> a{{1, 1, 0}, {0, 1, 1}};
  std::vector<std::vector<Scalar>> b{{1, 2, 1}, {1, 0, -1}};
  std::vector<std::vector<Scalar>> c{{1, 0, 0}};
  CHECK(exact::same_span(a, b, 3));
  CHECK_FALSE(exact::same_span(a, c, 3));
}

TEST_CASE("graded maps apply and invert blockwise") {
  exact::GradedMap<Key, Key> m;
  m.set_block(1, {Key{"a"}, Key{"b"}}, {Key{"x"}, Key{"y"}}, Matrix{{1, 1}, {0, 1}});
  CHECK(m.apply(Key{"b"}) == LinComb<Key>(Key{"x"}) + LinComb<Key>(Key{"y"}));
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(inv->apply(m.apply(Key{"b"})) == LinComb<Key>(Key{"b"}));
  CHECK_THROWS_AS(m.apply(Key{"zz"}), DomainError);
  CHECK_THROWS_AS(m.set_block(2, {Key{"c"}}, {}, Matrix(1, 1)), DomainError);
}

TEST_CASE("parallel_for fills every slot once") {
  std::vector<int> hits(1000, 0);
  exact::parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS(exact::parallel_for(10, 3, [](std::size_t i) {
    if (i == 5) throw DomainError("boom");
  }));
}

TEST_CASE("power series arithmetic") {
  PowerSeries one_minus_t({1, -1}, 6);
  auto geo = one_minus_t.inverse();
  for (std::size_t i = 0; i <= 6; ++i) CHECK(geo[i] == 1);
  CHECK((geo * one_minus_t).truncated(6) == PowerSeries({1}, 6));
  CHECK_THROWS(PowerSeries({0, 1}, 3).inverse());
}

TEST_CASE("planar series of one generator is Catalan") {
  auto f = exact::series_from_alphabet(PowerSeries({0, 1}, 8), 8);
  for (int n = 0; n <= 8; ++n) CHECK(f[static_cast<std::size_t>(n)] == Scalar(exact::BigInt(oracle::catalan(n))));
}

TEST_CASE("series_from_alphabet matches the fixed-point oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> a{0};
    for (int i = 1; i <= 8; ++i) a.push_back(static_cast<int>(rng() % 5));
    auto got = exact::series_from_alphabet(PowerSeries(a, 8), 8);
    auto want = oracle::planar_series(a, 8);
    for (std::size_t i = 0; i <= 8; ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("series round trip to order 8") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Scalar> a{0};
    for (int i = 1; i <= 8; ++i) a.push_back(static_cast<int>(rng() % 7) - 1);
    PowerSeries alpha(a, 8);
    CHECK(exact::series_to_alphabet(exact::series_from_alphabet(alpha, 8), 8) == alpha);
  }
  CHECK_THROWS_AS(exact::series_from_alphabet(PowerSeries({1, 1}, 3), 3), DomainError);
  CHECK_THROWS_AS(exact::series_to_alphabet(PowerSeries({2, 1}, 3), 3), DomainError);
}
