#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permstack/errors.hpp"
#include "permstack/word.hpp"

namespace permstack {

// A plain letter m, or m^c, which matches the entry whose complement is m.
struct LiteralLetter {
  Letter value = 1;
  bool complemented = false;

  // The concrete entry this letter pins down inside a permutation of length n.
  Letter resolve(std::size_t n) const {
    return complemented ? static_cast<Letter>(n + 1) - value : value;
  }

  friend bool operator==(const LiteralLetter&, const LiteralLetter&) = default;
};

using LiteralWord = std::vector<LiteralLetter>;

inline std::string to_string(const LiteralWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(w[i].value);
    if (w[i].complemented) s.push_back('c');
  }
  return s;
}

// "1,1c,2"; the compact "11c2" is accepted when every value is a single digit.
inline LiteralWord parse_literal_word(std::string_view text) {
  const std::string_view original = text;
  text = detail::trim(text);
  LiteralWord out;
  auto push = [&](std::string_view tok) {
    tok = detail::trim(tok);
    LiteralLetter l;
    if (!tok.empty() && tok.back() == 'c') {
      l.complemented = true;
      tok.remove_suffix(1);
    }
    l.value = detail::parse_letter(tok, original);
    out.push_back(l);
  };
  if (text.empty()) return out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      push(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const bool marked = i + 1 < text.size() && text[i + 1] == 'c';
      push(text.substr(i, marked ? 2 : 1));
      if (marked) ++i;
    }
  }
  return out;
}

/// True iff there are indices i_1 < ... < i_k where p(i_j) equals L(j)
/// literally, or p^c(i_j) = m when L(j) = m^c.
inline bool literally_contains(const Word& p, const LiteralWord& pattern) {
  const std::size_t n = p.size();
  std::size_t j = 0;
  // Every letter names one exact value, so earliest matching is optimal.
  for (std::size_t i = 0; i < n && j < pattern.size(); ++i) {
    if (p[i] == pattern[j].resolve(n)) ++j;
  }
  return j == pattern.size();
}

inline LiteralWord reverse(const LiteralWord& w) { return LiteralWord(w.rbegin(), w.rend()); }

}  // namespace permstack
