#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "permstack/enumerate.hpp"
#include "permstack/literal.hpp"
#include "permstack/word.hpp"

namespace permstack {

// Extremal fertility constructions for a single pattern sigma of length
// k >= 3 whose first two entries are consecutive integers.

inline bool has_consecutive_lead(const Word& sigma) {
  return sigma.size() >= 2 && std::abs(sigma[0] - sigma[1]) == 1;
}

namespace detail {

inline void require_extremal_pattern(const Word& sigma) {
  require_permutation(sigma, "pattern");
  if (sigma.size() < 3) throw std::invalid_argument("pattern must have length >= 3");
  if (!has_consecutive_lead(sigma)) {
    throw std::invalid_argument("pattern " + to_string(sigma) +
                                " does not start with two consecutive integers");
  }
}

}  // namespace detail

/// kappa(sigma)(i) = sigma(i+2) when below sigma(1), else (k+1-sigma(i+2))^c.
inline LiteralWord kappa(const Word& sigma) {
  detail::require_extremal_pattern(sigma);
  const auto k = static_cast<Letter>(sigma.size());
  LiteralWord out;
  for (std::size_t i = 2; i < sigma.size(); ++i) {
    if (sigma[i] < sigma[0]) {
      out.push_back({sigma[i], false});
    } else {
      out.push_back({k + 1 - sigma[i], true});
    }
  }
  return out;
}

/// mu(sigma) in S_n: the last k-2 entries spell kappa(sigma) literally; the
/// other entries increase when sigma(1) > sigma(2) and decrease otherwise.
inline Word mu(const Word& sigma, std::size_t n) {
  const LiteralWord kap = kappa(sigma);
  if (n < sigma.size()) throw std::invalid_argument("mu needs n >= pattern length");
  std::vector<Letter> tail;
  std::vector<bool> used(n + 1, false);
  for (const LiteralLetter& l : kap) {
    const Letter v = l.resolve(n);
    tail.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Letter> head;
  for (std::size_t v = 1; v <= n; ++v) {
    if (!used[v]) head.push_back(static_cast<Letter>(v));
  }
  if (sigma[0] < sigma[1]) std::reverse(head.begin(), head.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return Word(std::move(head));
}

/// P_{sigma,n}: the first k-2 entries spell reverse(kappa(sigma)) literally and
/// the rest are order isomorphic to a 231-avoider (sigma(1) > sigma(2)) or a
/// 213-avoider (sigma(1) < sigma(2)). Sorted lexicographically.
inline std::vector<Word> p_set(const Word& sigma, std::size_t n) {
  const LiteralWord kap = reverse(kappa(sigma));
  if (n < sigma.size()) throw std::invalid_argument("p_set needs n >= pattern length");
  check_size(n);
  std::vector<Letter> head;
  std::vector<bool> used(n + 1, false);
  for (const LiteralLetter& l : kap) {
    const Letter v = l.resolve(n);
    head.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Letter> free_values;
  for (std::size_t v = 1; v <= n; ++v) {
    if (!used[v]) free_values.push_back(static_cast<Letter>(v));
  }
  const Word avoid = sigma[0] > sigma[1] ? Word{2, 3, 1} : Word{2, 1, 3};
  std::vector<Word> out;
  for (const Word& rho : enumerate_avoiders(free_values.size(), {avoid})) {
    std::vector<Letter> p = head;
    for (Letter a : rho) p.push_back(free_values[static_cast<std::size_t>(a - 1)]);
    out.emplace_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permstack
