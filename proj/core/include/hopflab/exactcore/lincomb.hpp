#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/exactcore/scalar.hpp"

namespace hopflab::exact {

/// Finite formal linear combination of basis keys with rational
/// coefficients. Zero coefficients are never stored, so two equal
/// combinations always have identical term maps.
///
/// `K` must be totally ordered (`operator<`). Textual output additionally
/// needs an ADL-visible `to_string(const K&)`.
template <class K>
class LinComb {
 public:
  using key_type = K;
  using map_type = std::map<K, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(K key, Scalar coeff = 1) { add(std::move(key), coeff); }

  void add(const K& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool contains(const K& key) const { return terms_.count(key) != 0; }
  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Removes the term on `key` (if any) and returns its coefficient.
  Scalar extract(const K& key) {
    auto it = terms_.find(key);
    if (it == terms_.end()) return Scalar(0);
    Scalar c = it->second;
    terms_.erase(it);
    return c;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  /// Adds `s * other` in place.
  void axpy(const Scalar& s, const LinComb& other) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, s * c);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

template <class K>
using Tensor = LinComb<std::pair<K, K>>;

template <class K>
using Tensor3 = LinComb<std::tuple<K, K, K>>;

/// Linear extension of `f : K -> LinComb<R>` (or any type convertible to it).
template <class K, class F>
auto linear_map(const LinComb<K>& x, F&& f) {
  using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
  R out;
  for (const auto& [k, c] : x) out.axpy(c, f(k));
  return out;
}

/// Bilinear extension of `f : (A, B) -> LinComb<R>`.
template <class A, class B, class F>
auto bilinear_map(const LinComb<A>& x, const LinComb<B>& y, F&& f) {
  using R = std::decay_t<decltype(f(std::declval<const A&>(), std::declval<const B&>()))>;
  R out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.axpy(ca * cb, f(a, b));
  }
  return out;
}

/// x (x) y.
template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& x, const LinComb<B>& y) {
  LinComb<std::pair<A, B>> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

/// Swaps the two factors of every term.
template <class K>
Tensor<K> flip(const Tensor<K>& t) {
  Tensor<K> out;
  for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering. Keys are rendered with an ADL `to_string`; tensor keys
// join their factors with " (x) ".

namespace detail {

template <class K>
std::string key_text(const K& key) {
  using std::to_string;
  return to_string(key);
}

template <class A, class B>
std::string key_text(const std::pair<A, B>& key) {
  return key_text(key.first) + " (x) " + key_text(key.second);
}

template <class... Ts>
std::string key_text(const std::tuple<Ts...>& key) {
  std::string out;
  std::apply(
      [&](const auto&... parts) {
        ((out += (out.empty() ? "" : " (x) ") + key_text(parts)), ...);
      },
      key);
  return out;
}

template <class K>
std::string key_text(const std::vector<K>& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += " (x) ";
    out += key_text(key[i]);
  }
  return out;
}

}  // namespace detail

template <class K>
std::string format_key(const K& key) {
  return detail::key_text(key);
}

/// Terms ordered lexicographically by the rendered key; this is the order
/// used by every serialized form.
template <class K>
std::vector<std::pair<const K*, const Scalar*>> canonical_terms(const LinComb<K>& x) {
  std::vector<std::pair<std::string, std::pair<const K*, const Scalar*>>> tagged;
  tagged.reserve(x.size());
  for (const auto& [k, c] : x) tagged.push_back({format_key(k), {&k, &c}});
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<const K*, const Scalar*>> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(t.second);
  return out;
}

/// `c1*K1 + c2*K2 - K3`; unit coefficients are omitted, zero prints as `0`.
template <class K>
std::string to_string(const LinComb<K>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : canonical_terms(x)) {
    Scalar c = *coeff;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != Scalar(1)) out += c.str() + "*";
    out += format_key(*key);
    first = false;
  }
  return out;
}

/// Reads the format written by to_string: terms `c*K` or `K` joined by `+`
/// or `-` outside brackets, `c` an integer or fraction. "0" is the zero
/// combination. Keys are handed to `parse_key`.
template <class K, class P>
LinComb<K> parse_lincomb(std::string_view text, P&& parse_key) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  LinComb<K> out;
  if (trim(text) == "0") return out;
  auto emit = [&](std::string_view term, bool negative) {
    term = trim(term);
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    Scalar c = 1;
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      const char ch = term[i];
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      if (ch == '*' && depth == 0) {
        c = Scalar::parse(trim(term.substr(0, i)));
        term = trim(term.substr(i + 1));
        break;
      }
    }
    out.add(parse_key(term), negative ? -c : c);
  };
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  bool seen = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      auto before = trim(text.substr(start, i - start));
      if (!before.empty()) {
        emit(before, negative);
        seen = true;
      } else if (seen) {
        throw ParseError("missing term in '" + std::string(text) + "'");
      }
      negative = ch == '-';
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  emit(text.substr(start), negative);
  return out;
}

}  // namespace hopflab::exact
