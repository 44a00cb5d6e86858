#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "permstack/catalan.hpp"
#include "permstack/errors.hpp"
#include "permstack/pattern.hpp"
#include "permstack/word.hpp"

namespace permstack {

// Exhaustive sweeps over S_n never go past this length.
inline constexpr unsigned kHardMaxN = 12;

inline void check_size(std::size_t n, unsigned cap = kHardMaxN) {
  if (n > cap) {
    throw size_limit_error("length " + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(cap));
  }
}

using PermRank = std::uint32_t;  // 12! < 2^32

// Position of p in the lexicographic listing of S_n.
inline PermRank permutation_rank(std::span<const Letter> p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank = rank * (n - i) + smaller;
  }
  return static_cast<PermRank>(rank);
}

inline PermRank permutation_rank(const Word& p) { return permutation_rank(p.letters()); }

inline Word permutation_unrank(std::size_t n, std::uint64_t rank) {
  std::vector<Letter> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Letter>(i + 1);
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(static_cast<unsigned>(n - 1 - i));
    const std::size_t pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Word(std::move(out));
}

/// Calls f(p) for every p in S_n in lexicographic order (rank 0, 1, ...).
template <typename F>
void for_each_permutation(std::size_t n, F&& f) {
  check_size(n);
  std::vector<Letter> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Letter>(i + 1);
  do {
    f(Word(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

// Same as for_each_permutation restricted to ranks [first, last).
template <typename F>
void for_each_permutation_in(std::size_t n, std::uint64_t first, std::uint64_t last, F&& f) {
  if (first >= last) return;
  Word start = permutation_unrank(n, first);
  std::vector<Letter> p = start.vector();
  for (std::uint64_t r = first; r < last; ++r) {
    f(r, Word(p));
    std::next_permutation(p.begin(), p.end());
  }
}

inline std::vector<Word> all_permutations(std::size_t n) {
  check_size(n);
  std::vector<Word> out;
  out.reserve(factorial(static_cast<unsigned>(n)));
  for_each_permutation(n, [&](const Word& p) { out.push_back(p); });
  return out;
}

/// Members of S_n avoiding every pattern in the range, in lexicographic order.
/// An empty range yields all of S_n.
template <typename PatternRange>
std::vector<Word> enumerate_avoiders(std::size_t n, const PatternRange& patterns) {
  std::vector<Word> out;
  for_each_permutation(n, [&](const Word& p) {
    if (avoids_set(p, patterns)) out.push_back(p);
  });
  return out;
}

inline std::vector<Word> enumerate_avoiders(std::size_t n, std::initializer_list<Word> patterns) {
  return enumerate_avoiders(n, std::vector<Word>(patterns));
}

/// Splits ranks [0, total) into contiguous blocks, one per worker, and runs
/// f(first, last) on each. Results must be written by rank so the outcome does
/// not depend on the worker count.
template <typename F>
void parallel_ranges(std::uint64_t total, unsigned workers, F&& f) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 2 * workers) {
    f(std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  const std::uint64_t block = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = w * block;
    const std::uint64_t last = std::min(total, first + block);
    if (first >= last) break;
    threads.emplace_back([&f, first, last] { f(first, last); });
  }
}

}  // namespace permstack
