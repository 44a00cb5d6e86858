#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "permstack/errors.hpp"
#include "permstack/word.hpp"

namespace permstack {

namespace detail {

// Extends a partial occurrence of p[0..depth) at positions idx[0..depth).
inline bool extend_occurrence(std::span<const Letter> w, std::span<const Letter> p,
                              std::vector<std::size_t>& idx, std::size_t depth) {
  if (depth == p.size()) return true;
  const std::size_t first = depth == 0 ? 0 : idx[depth - 1] + 1;
  const std::size_t last = w.size() - (p.size() - depth);  // inclusive
  for (std::size_t i = first; i <= last && i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s) {
      const Letter a = w[idx[s]];
      ok = ((w[i] < a) == (p[depth] < p[s])) && ((w[i] > a) == (p[depth] > p[s]));
    }
    if (!ok) continue;
    idx[depth] = i;
    if (extend_occurrence(w, p, idx, depth + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of w (not necessarily contiguous) is order
/// isomorphic to the permutation p.
inline bool contains(std::span<const Letter> w, std::span<const Letter> p) {
  if (p.size() > w.size()) return false;
  if (p.empty()) return true;
  std::vector<std::size_t> idx(p.size());
  return detail::extend_occurrence(w, p, idx, 0);
}

inline bool contains(const Word& w, const Word& p) { return contains(w.letters(), p.letters()); }

template <typename PatternRange>
bool avoids_set(std::span<const Letter> w, const PatternRange& patterns) {
  for (const Word& p : patterns) {
    if (contains(w, p.letters())) return false;
  }
  return true;
}

template <typename PatternRange>
bool avoids_set(const Word& w, const PatternRange& patterns) {
  return avoids_set(w.letters(), patterns);
}

inline bool avoids_set(const Word& w, std::initializer_list<Word> patterns) {
  return avoids_set(w.letters(), std::vector<Word>(patterns));
}

inline std::string pattern_to_string(const Word& p) {
  const bool compact = std::all_of(p.begin(), p.end(), [](Letter a) { return a <= 9; });
  return compact ? to_string(p) : "[" + to_comma_string(p) + "]";
}

// A nonempty set of forbidden stack patterns, each a permutation of length at
// least 2, kept sorted lexicographically. Sets need not be reduced; callers
// that require it check is_reduced() or go through reduce().
class PatternSet {
 public:
  using const_iterator = std::vector<Word>::const_iterator;

  PatternSet(std::initializer_list<Word> patterns) : PatternSet(std::vector<Word>(patterns)) {}

  explicit PatternSet(std::vector<Word> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw pattern_error("pattern set must not be empty");
    for (const Word& p : patterns_) {
      if (!is_permutation(p)) {
        throw pattern_error("pattern '" + to_comma_string(p) + "' is not a permutation");
      }
      if (p.size() < 2) {
        throw pattern_error("pattern '" + to_comma_string(p) + "' has length < 2");
      }
    }
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
    min_len_ = patterns_.front().size();
    for (const Word& p : patterns_) min_len_ = std::min(min_len_, p.size());
  }

  std::size_t size() const noexcept { return patterns_.size(); }
  // Minimum pattern length, written k throughout.
  std::size_t min_len() const noexcept { return min_len_; }
  const_iterator begin() const noexcept { return patterns_.begin(); }
  const_iterator end() const noexcept { return patterns_.end(); }
  const std::vector<Word>& patterns() const noexcept { return patterns_; }

  bool contains_pattern(const Word& p) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), p);
  }

  bool is_reduced() const {
    for (const Word& a : patterns_) {
      for (const Word& b : patterns_) {
        if (a != b && contains(a, b)) return false;
      }
    }
    return true;
  }

  PatternSet reversed() const { return transformed([](const Word& p) { return reverse(p); }); }
  PatternSet complemented() const {
    return transformed([](const Word& p) { return complement(p); });
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (i) s.push_back(',');
      s += pattern_to_string(patterns_[i]);
    }
    return s;
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  template <typename F>
  PatternSet transformed(F f) const {
    std::vector<Word> out;
    out.reserve(patterns_.size());
    for (const Word& p : patterns_) out.push_back(f(p));
    return PatternSet(std::move(out));
  }

  std::vector<Word> patterns_;
  std::size_t min_len_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const PatternSet& t) {
  return os << '{' << t.to_string() << '}';
}

/// Drops every pattern that contains another member. The machine behaves
/// identically under the input set and the result.
inline PatternSet reduce(const std::vector<Word>& patterns) {
  const PatternSet all(patterns);  // validates
  std::vector<Word> kept;
  for (const Word& a : all) {
    const bool redundant = std::any_of(all.begin(), all.end(), [&](const Word& b) {
      return a != b && contains(a, b);
    });
    if (!redundant) kept.push_back(a);
  }
  return PatternSet(std::move(kept));
}

inline PatternSet reduce(const PatternSet& t) { return reduce(t.patterns()); }

// "123,132" or bracketed multi-digit patterns "[10,2,...],123".
inline PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Word> patterns;
  const std::string_view original = text;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw parse_error("bad pattern list '" + std::string(original) + "': " + why);
  };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t end;
    if (text[i] == '[') {
      end = text.find(']', i);
      if (end == std::string_view::npos) fail("unclosed bracket");
      ++end;
    } else {
      end = text.find(',', i);
      if (end == std::string_view::npos) end = text.size();
    }
    const std::string_view tok = detail::trim(text.substr(i, end - i));
    if (tok.empty()) fail("empty pattern");
    Word p = parse_word(tok);
    if (!is_permutation(p)) fail("'" + std::string(tok) + "' is not a permutation");
    patterns.push_back(std::move(p));
    i = end;
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size()) {
      if (text[i] != ',') fail("expected ','");
      ++i;
      if (i == text.size()) fail("trailing ','");
    }
  }
  return PatternSet(std::move(patterns));
}

}  // namespace permstack
