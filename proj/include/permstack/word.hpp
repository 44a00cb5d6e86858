#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstack/errors.hpp"

namespace permstack {

using Letter = int;

// A finite sequence of positive integers. Repeated letters are allowed; a
// permutation is the special case whose letters are exactly 1..n.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;

  Word(std::initializer_list<Letter> letters) : letters_(letters) { validate(); }

  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    validate();
  }

  template <typename It>
  Word(It first, It last) : letters_(first, last) {
    validate();
  }

  static Word identity(std::size_t n) {
    Word w;
    w.letters_.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.letters_[i] = static_cast<Letter>(i + 1);
    return w;
  }

  static Word reverse_identity(std::size_t n) {
    Word w;
    w.letters_.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.letters_[i] = static_cast<Letter>(n - i);
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vector() const noexcept { return letters_; }

  void push_back(Letter a) {
    if (a < 1) throw std::invalid_argument("word letters must be positive");
    letters_.push_back(a);
  }

  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  // Contiguous factor [first, first + count).
  Word slice(std::size_t first, std::size_t count) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                      letters_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  void validate() const {
    for (Letter a : letters_) {
      if (a < 1) throw std::invalid_argument("word letters must be positive");
    }
  }

  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.append(b);
  return w;
}

inline bool is_permutation(const Word& w) {
  const std::size_t n = w.size();
  std::vector<bool> seen(n + 1, false);
  for (Letter a : w) {
    if (static_cast<std::size_t>(a) > n || seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
  }
  return true;
}

inline void require_permutation(const Word& w, std::string_view what) {
  if (!is_permutation(w)) {
    throw std::invalid_argument(std::string(what) + " must be a permutation of 1..n");
  }
}

/// Both words have the same length and every pair of positions compares the
/// same way in each. Equal letters satisfy neither < nor >.
inline bool order_isomorphic(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if ((u[i] < u[j]) != (v[i] < v[j])) return false;
      if ((u[i] > u[j]) != (v[i] > v[j])) return false;
    }
  }
  return true;
}

inline bool order_isomorphic(const Word& u, const Word& v) {
  return order_isomorphic(u.letters(), v.letters());
}

inline Word reverse(const Word& w) { return Word(w.vector().rbegin(), w.vector().rend()); }

// Letter m becomes len + 1 - m.
inline Word complement(const Word& p) {
  require_permutation(p, "complement argument");
  std::vector<Letter> out(p.size());
  const auto n1 = static_cast<Letter>(p.size() + 1);
  std::transform(p.begin(), p.end(), out.begin(), [n1](Letter a) { return n1 - a; });
  return Word(std::move(out));
}

// Swaps the first two letters: s(2) s(1) s(3) ... s(k).
inline Word hat(const Word& s) {
  if (s.size() < 2) throw std::invalid_argument("hat requires length >= 2");
  std::vector<Letter> out = s.vector();
  std::swap(out[0], out[1]);
  return Word(std::move(out));
}

// Relabels a word of distinct letters to the permutation with the same
// relative order.
inline Word standardize(std::span<const Letter> w) {
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  std::vector<Letter> out(w.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<Letter>(r + 1);
  return Word(std::move(out));
}

// Canonical text: compact digits when every letter is at most 9, otherwise
// comma-separated decimals.
inline std::string to_string(const Word& w) {
  const bool compact = std::all_of(w.begin(), w.end(), [](Letter a) { return a <= 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (compact) {
      s.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i) s.push_back(',');
      s += std::to_string(w[i]);
    }
  }
  return s;
}

inline std::string to_comma_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Letter parse_letter(std::string_view tok, std::string_view context) {
  tok = trim(tok);
  if (tok.empty()) throw parse_error("empty letter in '" + std::string(context) + "'");
  long value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') {
      throw parse_error("invalid letter '" + std::string(tok) + "' in '" +
                        std::string(context) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw parse_error("letter out of range in '" + std::string(context) + "'");
  }
  if (value < 1) throw parse_error("letters must be positive in '" + std::string(context) + "'");
  return static_cast<Letter>(value);
}

}  // namespace detail

// Accepts "5,2,4,1,3", the compact "52413", and either wrapped in brackets.
inline Word parse_word(std::string_view text) {
  const std::string_view original = text;
  text = detail::trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = detail::trim(text.substr(1, text.size() - 2));
  }
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      letters.push_back(detail::parse_letter(text.substr(start, comma - start), original));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw parse_error("invalid compact word '" + std::string(original) + "'");
      }
      letters.push_back(c - '0');
    }
  }
  return Word(std::move(letters));
}

inline Word parse_permutation(std::string_view text) {
  Word w = parse_word(text);
  if (!is_permutation(w)) {
    throw parse_error("'" + std::string(text) + "' is not a permutation of 1..n");
  }
  return w;
}

}  // namespace permstack

template <>
struct std::hash<permstack::Word> {
  std::size_t operator()(const permstack::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (permstack::Letter a : w) {
      h ^= static_cast<std::size_t>(a);
      h *= 1099511628211ull;
    }
    return h;
  }
};
