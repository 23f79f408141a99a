#include "hopflab/words/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "hopflab/error.hpp"

namespace hopflab::words {

std::string to_string(const ParkingWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters[i]);
  }
  return out + ")";
}

ParkingWord parse_word(std::string_view text) {
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("word: " + what + " in '" + std::string(text) + "'");
  };
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (e - b < 2 || text[b] != '(' || text[e - 1] != ')') throw fail("expected '(...)'");
  std::string_view body = text.substr(b + 1, e - b - 2);
  ParkingWord w;
  const bool commas = body.find(',') != std::string_view::npos;
  if (!commas) {
    for (char ch : body) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail("unexpected character");
      w.letters.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      std::size_t next = body.find(',', pos);
      std::string_view item = body.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      long value = 0;
      bool digits = false;
      for (char ch : item) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail("unexpected character");
        value = value * 10 + (ch - '0');
        if (value > std::numeric_limits<int>::max()) throw fail("letter too large");
        digits = true;
      }
      if (!digits) throw fail("empty letter");
      w.letters.push_back(static_cast<int>(value));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  }
  for (int l : w.letters) {
    if (l < 1) throw fail("letters must be positive");
  }
  return w;
}

bool is_parking(const std::vector<int>& w) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_permutation(const std::vector<int>& w) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

ParkingWord standardize(const std::vector<int>& w) {
  std::map<int, int> rank;
  for (int l : w) {
    if (!rank.emplace(l, 0).second) throw DomainError("standardization needs distinct letters");
  }
  int next = 1;
  for (auto& [l, r] : rank) r = next++;
  ParkingWord out;
  for (int l : w) out.letters.push_back(rank[l]);
  return out;
}

ParkingWord parkize(const std::vector<int>& w) {
  ParkingWord out{w};
  const int n = out.size();
  for (int l : out.letters) {
    if (l < 1) throw DomainError("letters must be positive");
  }
  while (true) {
    std::vector<int> count(static_cast<std::size_t>(n + 1), 0);
    for (int l : out.letters) {
      if (l <= n) ++count[static_cast<std::size_t>(l)];
    }
    int deficient = 0;
    int running = 0;
    for (int d = 1; d <= n; ++d) {
      running += count[static_cast<std::size_t>(d)];
      if (running < d) {
        deficient = d;
        break;
      }
    }
    if (deficient == 0) return out;
    for (int& l : out.letters) {
      if (l > deficient) --l;
    }
  }
}

ParkingWord shifted_concat(const ParkingWord& s, const ParkingWord& t) {
  ParkingWord out = s;
  for (int l : t.letters) out.letters.push_back(l + s.size());
  return out;
}

namespace {

void require_parking(const ParkingWord& w) {
  if (!is_parking(w.letters)) throw DomainError("not a parking word: " + to_string(w));
}

// Visits every way of interleaving a (kept in order) with b (kept in order),
// as the ascending position set occupied by a, in lexicographic order.
template <class Visit>
void for_each_shuffle(const std::vector<int>& a, const std::vector<int>& b, Visit&& visit) {
  const std::size_t k = a.size(), total = a.size() + b.size();
  std::vector<std::size_t> pos(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t lo) {
    if (i == k) {
      std::vector<int> word(total);
      std::vector<char> taken(total, 0);
      for (std::size_t j = 0; j < k; ++j) {
        word[pos[j]] = a[j];
        taken[pos[j]] = 1;
      }
      std::size_t next = 0;
      for (std::size_t p = 0; p < total; ++p) {
        if (!taken[p]) word[p] = b[next++];
      }
      visit(word, pos);
      return;
    }
    for (std::size_t p = lo; p + (k - i) <= total; ++p) {
      pos[i] = p;
      rec(i + 1, p + 1);
    }
  };
  rec(0, 0);
}

std::vector<int> shifted(const ParkingWord& t, int by) {
  std::vector<int> out = t.letters;
  for (int& l : out) l += by;
  return out;
}

}  // namespace

LinComb<ParkingWord> shuffle_product(const ParkingWord& s, const ParkingWord& t) {
  require_parking(s);
  require_parking(t);
  LinComb<ParkingWord> out;
  for_each_shuffle(s.letters, shifted(t, s.size()),
                   [&](const std::vector<int>& w, const std::vector<std::size_t>&) { out.add(ParkingWord{w}, 1); });
  return out;
}

Tensor<ParkingWord> word_coproduct(const ParkingWord& s) {
  require_parking(s);
  Tensor<ParkingWord> out;
  for (std::size_t k = 0; k <= s.letters.size(); ++k) {
    std::vector<int> prefix(s.letters.begin(), s.letters.begin() + static_cast<long>(k));
    std::vector<int> suffix(s.letters.begin() + static_cast<long>(k), s.letters.end());
    out.add({parkize(prefix), parkize(suffix)}, 1);
  }
  return out;
}

Scalar fqsym_pairing(const ParkingWord& s, const ParkingWord& t) {
  if (!is_permutation(s.letters) || !is_permutation(t.letters)) throw DomainError("pairing needs permutations");
  if (s.size() != t.size()) return 0;
  for (int i = 1; i <= s.size(); ++i) {
    if (t.letters[static_cast<std::size_t>(s.letters[static_cast<std::size_t>(i - 1)] - 1)] != i) return 0;
  }
  return 1;
}

int m_index(const ParkingWord& s) {
  if (s.empty()) throw DomainError("m_index of the empty word");
  int best = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s.letters[static_cast<std::size_t>(i)] >= s.letters[static_cast<std::size_t>(best)]) best = i;
  }
  return best + 1;
}

Tensor<ParkingWord> word_delta_split(const ParkingWord& s, Side side) {
  require_parking(s);
  const int m = m_index(s);
  const int n = s.size();
  const int lo = side == Side::Prec ? 1 : m;
  const int hi = side == Side::Prec ? m - 1 : n - 1;
  Tensor<ParkingWord> out;
  for (int k = lo; k <= hi; ++k) {
    std::vector<int> prefix(s.letters.begin(), s.letters.begin() + k);
    std::vector<int> suffix(s.letters.begin() + k, s.letters.end());
    out.add({parkize(suffix), parkize(prefix)}, 1);
  }
  return out;
}

LinComb<ParkingWord> word_nwarrow(const ParkingWord& s, const ParkingWord& t) {
  if (s.empty() || t.empty()) throw DomainError("grafting product needs two non-empty words");
  require_parking(s);
  require_parking(t);
  const auto m = static_cast<std::size_t>(m_index(s));
  LinComb<ParkingWord> out;
  for_each_shuffle(s.letters, shifted(t, s.size()),
                   [&](const std::vector<int>& w, const std::vector<std::size_t>& pos) {
                     // First letter of the second block: the first position not used by s.
                     std::size_t first_t = 0;
                     while (first_t < pos.size() && pos[first_t] == first_t) ++first_t;
                     if (first_t > pos[m - 1]) out.add(ParkingWord{w}, 1);
                   });
  return out;
}

namespace {

std::vector<ParkingWord> sorted_by_text(std::vector<ParkingWord> in) {
  std::vector<std::pair<std::string, ParkingWord>> tagged;
  tagged.reserve(in.size());
  for (auto& w : in) tagged.emplace_back(to_string(w), std::move(w));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ParkingWord> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

}  // namespace

std::vector<ParkingWord> enumerate_parking(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<ParkingWord> out;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (is_parking(w)) out.push_back(ParkingWord{w});
      return;
    }
    for (int l = 1; l <= n; ++l) {
      w[static_cast<std::size_t>(i)] = l;
      rec(i + 1);
    }
  };
  rec(0);
  return sorted_by_text(std::move(out));
}

std::vector<ParkingWord> enumerate_permutations(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<ParkingWord> out;
  do {
    out.push_back(ParkingWord{w});
  } while (std::next_permutation(w.begin(), w.end()));
  return sorted_by_text(std::move(out));
}

std::string WordAlgebra::name() const {
  std::string base = permutations_only_ ? "fqsym" : "pqsym";
  return cop_ ? base + "-cop" : base;
}

std::vector<ParkingWord> WordAlgebra::basis(int n) const {
  return permutations_only_ ? enumerate_permutations(n) : enumerate_parking(n);
}

void WordAlgebra::check(const Key& k) const {
  if (permutations_only_ ? !is_permutation(k.letters) : !is_parking(k.letters)) {
    throw DomainError(to_string(k) + (permutations_only_ ? " is not a permutation" : " is not a parking word"));
  }
}

ParkingWord WordAlgebra::parse(std::string_view text) const {
  Key k = parse_word(text);
  check(k);
  return k;
}

LinComb<ParkingWord> WordAlgebra::product(const Key& a, const Key& b) const {
  check(a);
  check(b);
  return shuffle_product(a, b);
}

Tensor<ParkingWord> WordAlgebra::coproduct(const Key& k) const {
  check(k);
  auto d = word_coproduct(k);
  return cop_ ? exact::flip(d) : d;
}

Tensor<ParkingWord> WordAlgebra::delta(Side side, const Key& k) const {
  if (!cop_) throw DomainError("split coproducts live on the opposite-coproduct carrier");
  check(k);
  if (k.empty()) throw DomainError("split coproduct is defined on the augmentation ideal only");
  return word_delta_split(k, side);
}

LinComb<ParkingWord> WordAlgebra::nwarrow(const Key& a, const Key& b) const {
  check(a);
  check(b);
  return word_nwarrow(a, b);
}

}  // namespace hopflab::words
