#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permstack/dynamics/images.hpp"
#include "permstack/stack_sort.hpp"

namespace permstack {

namespace detail {

// 0-based positions of the decreasing half: n-2, n-4, ..., read in that
// order, holding 1, 2, ... in a half-decreasing permutation.
inline std::vector<std::size_t> decreasing_half_positions(std::size_t n) {
  std::vector<std::size_t> pos;
  const std::size_t m = n >= 1 ? (n - 1) / 2 : 0;
  for (std::size_t t = 0; t < m; ++t) pos.push_back(n - 2 - 2 * t);
  return pos;
}

}  // namespace detail

/// p(n-1) p(n-3) ... (stopping at p(2) or p(3)) is literally 1, 2, ..., m.
inline bool is_half_decreasing(const Word& p) {
  const auto pos = detail::decreasing_half_positions(p.size());
  for (std::size_t t = 0; t < pos.size(); ++t) {
    if (p[pos[t]] != static_cast<Letter>(t + 1)) return false;
  }
  return true;
}

inline bool is_half_increasing(const Word& p) { return is_half_decreasing(complement(p)); }

/// Closed form of s_{123,132} on a half-decreasing permutation: the
/// decreasing half stays put and the other entries rotate one place left
/// among their own positions.
inline Word half_decreasing_step(const Word& p) {
  require_permutation(p, "half_decreasing_step argument");
  if (!is_half_decreasing(p)) {
    throw std::invalid_argument(to_string(p) + " is not half-decreasing");
  }
  const std::size_t n = p.size();
  std::vector<bool> fixed(n, false);
  for (std::size_t i : detail::decreasing_half_positions(n)) fixed[i] = true;
  std::vector<std::size_t> moving;
  for (std::size_t i = 0; i < n; ++i) {
    if (!fixed[i]) moving.push_back(i);
  }
  std::vector<Letter> out = p.vector();
  for (std::size_t j = 0; j < moving.size(); ++j) {
    out[moving[j]] = p[moving[(j + 1) % moving.size()]];
  }
  return Word(std::move(out));
}

struct OrbitReport {
  Word start;
  std::vector<Word> tail;   // pre-periodic part, starting at `start` when nonempty
  std::vector<Word> cycle;  // begins where the trajectory first enters the cycle
  std::size_t cycle_length = 0;
};

/// Iterates s_T from p until a value repeats.
inline OrbitReport orbit(const Word& p, const PatternSet& t) {
  require_permutation(p, "orbit start");
  check_size(p.size());
  std::unordered_map<Word, std::size_t> seen;
  std::vector<Word> path;
  Word x = p;
  while (!seen.contains(x)) {
    seen.emplace(x, path.size());
    path.push_back(x);
    x = sort(x, t);
  }
  const std::size_t entry = seen.at(x);
  OrbitReport rep;
  rep.start = p;
  rep.tail.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(entry));
  rep.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(entry), path.end());
  rep.cycle_length = rep.cycle.size();
  return rep;
}

/// The disjoint cycles of s_T on S_n. Each cycle starts at its
/// lexicographically least member and cycles are ordered by that member.
inline std::vector<std::vector<Word>> orbit_partition(const PatternSet& t, std::size_t n,
                                                      unsigned workers = 1) {
  const auto next = image_ranks(t, n, workers);
  const std::size_t total = next.size();
  // Peel off nodes with no incoming edges; whatever survives lies on a cycle.
  std::vector<std::uint32_t> indegree(total, 0);
  for (PermRank r : next) ++indegree[r];
  std::vector<PermRank> queue;
  std::vector<bool> removed(total, false);
  for (PermRank r = 0; r < total; ++r) {
    if (indegree[r] == 0) queue.push_back(r);
  }
  while (!queue.empty()) {
    const PermRank r = queue.back();
    queue.pop_back();
    removed[r] = true;
    if (--indegree[next[r]] == 0) queue.push_back(next[r]);
  }
  std::vector<std::vector<Word>> cycles;
  std::vector<bool> done(total, false);
  for (PermRank r = 0; r < total; ++r) {
    if (removed[r] || done[r]) continue;
    std::vector<Word> cyc;
    for (PermRank x = r; !done[x]; x = next[x]) {
      done[x] = true;
      cyc.push_back(permutation_unrank(n, x));
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

/// Every p in S_n lying on a cycle of s_T, lexicographic.
inline std::vector<Word> periodic_points(const PatternSet& t, std::size_t n, unsigned workers = 1) {
  std::vector<Word> out;
  for (auto& cyc : orbit_partition(t, n, workers)) {
    out.insert(out.end(), cyc.begin(), cyc.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ConjectureCheck {
  bool holds = true;
  std::optional<Word> counterexample;  // least periodic point outside {id, id^r}
};

/// Finite check that the only periodic points of s_T on S_n are id_n and its
/// reverse.
inline ConjectureCheck conjecture_trivial_periodics(const PatternSet& t, std::size_t n,
                                                    unsigned workers = 1) {
  const Word id = Word::identity(n);
  const Word rid = Word::reverse_identity(n);
  for (const Word& p : periodic_points(t, n, workers)) {
    if (p != id && p != rid) return {false, p};
  }
  return {};
}

}  // namespace permstack
