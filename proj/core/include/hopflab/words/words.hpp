#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/hopf/algebras.hpp"

namespace hopflab::words {

using exact::LinComb;
using exact::Scalar;
using exact::Tensor;
using hopf::Side;

/// A word of positive integers; basis keys are parking words (and
/// permutations for the permutation algebra). The empty word is the unit.
struct ParkingWord {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend auto operator<=>(const ParkingWord&, const ParkingWord&) = default;
  friend bool operator==(const ParkingWord&, const ParkingWord&) = default;
};

inline int degree(const ParkingWord& w) { return w.size(); }

/// `(a1,a2,...)`; the empty word prints as `()`.
std::string to_string(const ParkingWord& w);

/// Accepts `(a1,a2,...)` and, for single-digit letters, `(a1a2...)`.
/// Letters must be positive. Throws ParseError.
ParkingWord parse_word(std::string_view text);

bool is_parking(const std::vector<int>& w);
bool is_permutation(const std::vector<int>& w);

/// Unique increasing relabeling onto 1..k. Throws DomainError when a letter
/// repeats.
ParkingWord standardize(const std::vector<int>& w);

/// Parkization: while some d has fewer than d letters <= d, take the
/// smallest such d and lower every letter > d by one. Identity on parking
/// words; equals standardize on words with distinct letters.
ParkingWord parkize(const std::vector<int>& w);

/// (a1..ak, b1+k..bl+k).
ParkingWord shifted_concat(const ParkingWord& s, const ParkingWord& t);

/// Sum over (k,l)-shuffles of the shifted concatenation. Throws
/// DomainError on non-parking input.
LinComb<ParkingWord> shuffle_product(const ParkingWord& s, const ParkingWord& t);

/// Sum over k = 0..n of Park(prefix) (x) Park(suffix).
Tensor<ParkingWord> word_coproduct(const ParkingWord& s);

/// 1 if t is the inverse of s, else 0. Throws DomainError on
/// non-permutations.
Scalar fqsym_pairing(const ParkingWord& s, const ParkingWord& t);

/// Last position (1-based) of the maximal letter. Throws DomainError on the
/// empty word.
int m_index(const ParkingWord& s);

/// Park(suffix) (x) Park(prefix) over cut positions k with 1 <= k < m (Prec)
/// or m <= k <= n-1 (Succ), m = m_index. Throws DomainError on the empty
/// word.
Tensor<ParkingWord> word_delta_split(const ParkingWord& s, Side side);

/// Shuffles of s with shifted t whose first t-letter comes after the m-th
/// letter of s (m = m_index(s)). Throws DomainError on empty input.
LinComb<ParkingWord> word_nwarrow(const ParkingWord& s, const ParkingWord& t);

/// Parking words of length n, sorted by serialization.
std::vector<ParkingWord> enumerate_parking(int n);
/// Permutations of 1..n, sorted by serialization.
std::vector<ParkingWord> enumerate_permutations(int n);

/// Word algebra: PQSym, or its permutation subalgebra FQSym. With `cop`
/// set, the coproduct is the opposite one; that is the carrier of the split
/// coproducts and the grafting product, and the only one where delta()
/// is available.
class WordAlgebra {
 public:
  using Key = ParkingWord;
  static constexpr bool has_dupdend = true;

  explicit WordAlgebra(bool permutations_only = false, bool cop = false)
      : permutations_only_(permutations_only), cop_(cop) {}

  std::string name() const;
  bool permutations_only() const { return permutations_only_; }
  bool cop() const { return cop_; }
  Key unit() const { return {}; }
  bool is_unit(const Key& k) const { return k.empty(); }
  int degree(const Key& k) const { return k.size(); }
  std::vector<Key> basis(int n) const;
  Key parse(std::string_view text) const;

  LinComb<Key> product(const Key& a, const Key& b) const;
  Tensor<Key> coproduct(const Key& k) const;
  Tensor<Key> delta(Side side, const Key& k) const;
  LinComb<Key> nwarrow(const Key& a, const Key& b) const;

 private:
  void check(const Key& k) const;
  bool permutations_only_;
  bool cop_;
};

}  // namespace hopflab::words
