#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permstack/pattern.hpp"
#include "permstack/word.hpp"

namespace permstack {

// Decomposition a_0 a_1 ... a_k of a word cut at the colexicographically
// least occurrence of a reversed pattern of T.
struct Clumping {
  std::vector<Word> segments;                // a_0, ..., a_k; a_0 may be empty
  Word witness_pattern;                      // sigma in T; the cut points read as sigma^r
  std::vector<std::size_t> witness_indices;  // 0-based starts of a_1, ..., a_k

  friend bool operator==(const Clumping&, const Clumping&) = default;
};

/// Index tuples compared from the last entry backwards; a tuple that runs out
/// while tied is the smaller one.
inline bool colex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.rend() && ib != b.rend();
}

namespace detail {

// Fills idx[slot] and every slot to its left, choosing each position as
// small as possible, so the first success is colex-least for the fixed end.
inline bool colex_first_occurrence(std::span<const Letter> w, std::span<const Letter> pat,
                                   std::vector<std::size_t>& idx, std::size_t slot) {
  const std::size_t k = pat.size();
  const std::size_t upper = idx[slot + 1];  // exclusive
  for (std::size_t i = slot; i < upper; ++i) {
    bool ok = true;
    for (std::size_t s = slot + 1; s < k && ok; ++s) {
      const Letter a = w[idx[s]];
      ok = ((w[i] < a) == (pat[slot] < pat[s])) && ((w[i] > a) == (pat[slot] > pat[s]));
    }
    if (!ok) continue;
    idx[slot] = i;
    if (slot == 0 || colex_first_occurrence(w, pat, idx, slot - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// The T-clumping of w, or nullopt when w avoids every reversed pattern.
/// Ties between patterns sharing the least tuple go to the lexicographically
/// least pattern.
inline std::optional<Clumping> t_clumping(const Word& w, const PatternSet& t) {
  std::vector<Word> reversed;
  for (const Word& s : t) reversed.push_back(reverse(s));
  for (std::size_t last = 0; last < w.size(); ++last) {
    std::optional<std::vector<std::size_t>> best;
    const Word* best_pattern = nullptr;
    for (std::size_t pi = 0; pi < t.size(); ++pi) {
      const Word& pat = reversed[pi];
      const std::size_t k = pat.size();
      if (k > last + 1) continue;
      std::vector<std::size_t> idx(k);
      idx[k - 1] = last;
      if (!detail::colex_first_occurrence(w.letters(), pat.letters(), idx, k - 2)) continue;
      if (!best || colex_less(idx, *best)) {
        best = idx;
        best_pattern = &t.patterns()[pi];
      }
    }
    if (!best) continue;
    Clumping c;
    c.witness_pattern = *best_pattern;
    c.witness_indices = *best;
    c.segments.push_back(w.slice(0, c.witness_indices.front()));
    for (std::size_t s = 0; s < c.witness_indices.size(); ++s) {
      const std::size_t begin = c.witness_indices[s];
      const std::size_t end =
          s + 1 < c.witness_indices.size() ? c.witness_indices[s + 1] : w.size();
      c.segments.push_back(w.slice(begin, end - begin));
    }
    return c;
  }
  return std::nullopt;
}

/// Evaluates s_T through the clumping recursion instead of simulating the
/// stack: a T^r-avoiding word is reversed; otherwise
/// s_T(a_0...a_k) = a_{k-1}^r s_T(a_0 ... a_{k-2} a_k).
inline Word sort_recursive(const Word& input, const PatternSet& t) {
  Word out;
  Word rest = input;
  while (auto c = t_clumping(rest, t)) {
    const std::size_t k = c->segments.size() - 1;
    out.append(reverse(c->segments[k - 1]));
    Word next;
    for (std::size_t s = 0; s + 2 <= k; ++s) next.append(c->segments[s]);
    next.append(c->segments[k]);
    rest = std::move(next);
  }
  out.append(reverse(rest));
  return out;
}

}  // namespace permstack
