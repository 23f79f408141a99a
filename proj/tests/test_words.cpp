#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/hopf/laws.hpp"
#include "hopflab/words/words.hpp"
#include "oracles.hpp"

using namespace hopflab;
using namespace hopflab::words;

namespace {

ParkingWord w(const char* s) { return parse_word(s); }

LinComb<ParkingWord> sum(std::initializer_list<const char*> words) {
  LinComb<ParkingWord> out;
  for (const char* s : words) out.add(parse_word(s), 1);
  return out;
}

// Every word of length n over 1..k.
std::vector<std::vector<int>> all_words(int n, int k) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out) {
      for (int a = 1; a <= k; ++a) {
        auto q = p;
        q.push_back(a);
        next.push_back(q);
      }
    }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("word serialization") {
  CHECK(to_string(w("(1,2,3)")) == "(1,2,3)");
  CHECK(w("(123)") == w("(1,2,3)"));
  CHECK(w("(10,1)").letters == std::vector<int>{10, 1});
  CHECK(to_string(ParkingWord{}) == "()");
  CHECK(w("()").empty());
  CHECK_THROWS_AS(parse_word("(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_word("1,2"), ParseError);
  CHECK_THROWS_AS(parse_word("(1,,2)"), ParseError);
}

TEST_CASE("parking predicates and counts") {
  CHECK(is_parking({1, 1, 3}));
  CHECK_FALSE(is_parking({1, 3, 3}));
  CHECK(is_permutation({2, 3, 1}));
  CHECK_FALSE(is_permutation({1, 1}));
  for (int n = 0; n <= 5; ++n) {
    auto p = enumerate_parking(n);
    CHECK(p.size() == (n == 0 ? 1 : oracle::cayley_forests(n)));
    CHECK(std::set<ParkingWord>(p.begin(), p.end()).size() == p.size());
    for (const auto& x : p) CHECK(is_parking(x.letters));
  }
  for (int n = 0; n <= 6; ++n) CHECK(enumerate_permutations(n).size() == oracle::factorial(n));
}

TEST_CASE("degree 3 parking functions") {
  // [PUBLISHED] all sixteen.
  std::set<ParkingWord> want;
  for (const char* s : {"(123)", "(132)", "(213)", "(231)", "(312)", "(321)", "(112)", "(121)", "(211)", "(113)",
                        "(131)", "(311)", "(122)", "(212)", "(221)", "(111)"})
    want.insert(w(s));
  auto got = enumerate_parking(3);
  CHECK(std::set<ParkingWord>(got.begin(), got.end()) == want);
}

TEST_CASE("parkization matches the closed-form oracle") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& word : all_words(n, n + 2)) {
      CAPTURE(to_string(ParkingWord{word}));
      const auto p = parkize(word);
      CHECK(p == oracle::parkize(word));
      CHECK(is_parking(p.letters));
      CHECK(parkize(p.letters) == p);
    }
  }
  CHECK(parkize({3, 3, 2}) == w("(221)"));
  CHECK(standardize({4, 1, 3}) == w("(312)"));
  CHECK_THROWS_AS(standardize({1, 1}), DomainError);
}

TEST_CASE("parkization agrees with standardization on distinct letters") {
  for (const auto& word : all_words(4, 6)) {
    std::set<int> distinct(word.begin(), word.end());
    if (distinct.size() == word.size()) CHECK(parkize(word) == standardize(word));
  }
}

TEST_CASE("shuffle products match the mask oracle") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 5; ++b) {
      for (const auto& s : enumerate_parking(a)) {
        for (const auto& t : enumerate_parking(b)) {
          auto got = shuffle_product(s, t);
          CHECK(got == oracle::shuffle(s, t));
          exact::Scalar total = 0;
          for (const auto& [k, c] : got) total += c;
          CHECK(total == exact::Scalar(exact::BigInt(oracle::binomial(a + b, a))));
        }
      }
    }
  }
  CHECK_THROWS_AS(shuffle_product(w("(2)"), w("(1)")), DomainError);
}

TEST_CASE("displayed word products") {
  // [PUBLISHED]
  WordAlgebra fqsym(true), pqsym;
  CHECK(fqsym.product(w("(123)"), w("(21)")) ==
        sum({"(12354)", "(12534)", "(15234)", "(51234)", "(12543)", "(15243)", "(51243)", "(15423)", "(51423)",
             "(54123)"}));
  CHECK(pqsym.product(w("(121)"), w("(11)")) ==
        sum({"(12144)", "(12414)", "(14214)", "(41214)", "(12441)", "(14241)", "(41241)", "(14421)", "(41421)",
             "(44121)"}));
  CHECK(shifted_concat(w("(12)"), w("(11)")) == w("(1233)"));
  CHECK_THROWS_AS(fqsym.product(w("(11)"), w("(1)")), DomainError);
}

TEST_CASE("coproduct matches deconcatenation with parkization") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate_parking(n)) CHECK(word_coproduct(s) == oracle::deconcatenation(s));
  }
}

TEST_CASE("displayed permutation coproduct") {
  // [PUBLISHED] with the last term read as (41325) (x) 1.
  exact::Tensor<ParkingWord> want;
  want.add({ParkingWord{}, w("(41325)")}, 1);
  want.add({w("(1)"), w("(1324)")}, 1);
  want.add({w("(21)"), w("(213)")}, 1);
  want.add({w("(312)"), w("(12)")}, 1);
  want.add({w("(4132)"), w("(1)")}, 1);
  want.add({w("(41325)"), ParkingWord{}}, 1);
  CHECK(WordAlgebra(true).coproduct(w("(41325)")) == want);
  CHECK(WordAlgebra(true, true).coproduct(w("(41325)")) == exact::flip(want));
}

TEST_CASE("permutations are closed under product and coproduct") {
  WordAlgebra pqsym;
  for (int a = 1; a <= 3; ++a) {
    for (const auto& s : enumerate_permutations(a)) {
      for (const auto& [t, c] : pqsym.coproduct(s)) {
        CHECK(is_permutation(t.first.letters));
        CHECK(is_permutation(t.second.letters));
      }
      for (const auto& u : enumerate_permutations(4 - a)) {
        for (const auto& [x, c] : pqsym.product(s, u)) CHECK(is_permutation(x.letters));
      }
    }
  }
}

TEST_CASE("permutation pairing") {
  CHECK(fqsym_pairing(w("(231)"), w("(312)")) == 1);
  CHECK(fqsym_pairing(w("(231)"), w("(231)")) == 0);
  CHECK_THROWS_AS(fqsym_pairing(w("(11)"), w("(12)")), DomainError);
}

TEST_CASE("position of the last maximal letter") {
  CHECK(m_index(w("(21332)")) == 4);
  CHECK(m_index(w("(312)")) == 1);
  CHECK_THROWS_AS(m_index(ParkingWord{}), DomainError);
}

TEST_CASE("displayed split coproducts") {
  // [PUBLISHED]
  WordAlgebra cop(false, true);
  exact::Tensor<ParkingWord> prec, succ;
  prec.add({w("(1332)"), w("(1)")}, 1);
  prec.add({w("(221)"), w("(21)")}, 1);
  prec.add({w("(21)"), w("(213)")}, 1);
  succ.add({w("(1)"), w("(2133)")}, 1);
  CHECK(cop.delta(hopf::Side::Prec, w("(21332)")) == prec);
  CHECK(cop.delta(hopf::Side::Succ, w("(21332)")) == succ);
  CHECK_THROWS_AS(WordAlgebra(false, false).delta(hopf::Side::Prec, w("(1)")), DomainError);
}

TEST_CASE("displayed grafting product") {
  // [PUBLISHED]
  CHECK(word_nwarrow(w("(21331)"), w("(12)")) == sum({"(2133167)", "(2133617)", "(2133671)"}));
  CHECK(word_nwarrow(w("(132)"), w("(1)")) == sum({"(1324)", "(1342)"}));
  // When the maximal letter is last, grafting is the shifted concatenation.
  CHECK(word_nwarrow(w("(123)"), w("(21)")) == sum({"(12354)"}));
}

TEST_CASE("split coproducts add up to the opposite reduced coproduct") {
  CHECK(hopf::check_split_sum(WordAlgebra(false, true), 5).passed());
  CHECK(hopf::check_split_sum(WordAlgebra(true, true), 5).passed());
}

TEST_CASE("carrier membership is enforced") {
  WordAlgebra fqsym(true);
  CHECK_THROWS_AS(fqsym.coproduct(w("(11)")), DomainError);
  CHECK_THROWS_AS(WordAlgebra().product(w("(22)"), w("(1)")), DomainError);
  CHECK(fqsym.name() == "fqsym");
  CHECK(WordAlgebra(false, true).name() == "pqsym-cop");
}
