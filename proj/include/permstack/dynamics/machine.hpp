#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "permstack/catalan.hpp"
#include "permstack/enumerate.hpp"
#include "permstack/stack_sort.hpp"

namespace permstack {

/// The (sigma, tau)-machine: classical stack sort after s_{sigma, tau}.
inline Word machine_sort(const Word& p, const Word& sigma, const Word& tau) {
  return stack_sort(sort(p, PatternSet{sigma, tau}));
}

/// sort_n(sigma, tau): permutations of length n the machine sends to id_n.
inline std::vector<Word> sort_set(const Word& sigma, const Word& tau, std::size_t n,
                                  unsigned workers = 1) {
  check_size(n);
  const PatternSet t{sigma, tau};
  const Word id = Word::identity(n);
  const std::uint64_t total = factorial(static_cast<unsigned>(n));
  std::vector<char> hit(total, 0);
  parallel_ranges(total, workers, [&](std::uint64_t first, std::uint64_t last) {
    for_each_permutation_in(n, first, last, [&](std::uint64_t r, const Word& p) {
      hit[r] = stack_sort(sort(p, t)) == id;
    });
  });
  std::vector<Word> out;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (hit[r]) out.push_back(permutation_unrank(n, r));
  }
  return out;
}

inline std::uint64_t sort_count(const Word& sigma, const Word& tau, std::size_t n,
                                unsigned workers = 1) {
  return sort_set(sigma, tau, n, workers).size();
}

// How a computed row relates to the previously published n = 1..4 counts.
enum class PublishedStatus {
  match,        // one published row, same values
  mismatch,     // one published row, different values
  duplicated,   // label printed more than once with identical values
  conflicting,  // label printed more than once with different values
  unpublished,  // label absent from the published table
};

inline const char* to_string(PublishedStatus s) {
  switch (s) {
    case PublishedStatus::match: return "match";
    case PublishedStatus::mismatch: return "mismatch";
    case PublishedStatus::duplicated: return "duplicated";
    case PublishedStatus::conflicting: return "conflicting";
    case PublishedStatus::unpublished: return "unpublished";
  }
  return "?";
}

struct PublishedRow {
  Word sigma;
  Word tau;
  std::array<std::uint64_t, 4> counts;
};

// The published n = 1..4 table verbatim, 15 entries. The label (123,231)
// appears twice, (213,231) appears twice with different values, and
// (132,231) and (213,312) are missing.
inline const std::vector<PublishedRow>& published_sort_counts() {
  static const std::vector<PublishedRow> rows = {
      {{1, 2, 3}, {1, 3, 2}, {1, 2, 5, 14}}, {{1, 2, 3}, {2, 1, 3}, {1, 2, 5, 14}},
      {{1, 2, 3}, {2, 3, 1}, {1, 2, 6, 21}}, {{1, 2, 3}, {2, 3, 1}, {1, 2, 6, 21}},
      {{1, 2, 3}, {3, 1, 2}, {1, 2, 5, 15}}, {{1, 2, 3}, {3, 2, 1}, {1, 2, 4, 7}},
      {{1, 3, 2}, {2, 1, 3}, {1, 2, 5, 15}}, {{1, 3, 2}, {3, 1, 2}, {1, 2, 5, 14}},
      {{1, 3, 2}, {3, 2, 1}, {1, 2, 4, 10}}, {{2, 1, 3}, {2, 3, 1}, {1, 2, 6, 23}},
      {{2, 1, 3}, {2, 3, 1}, {1, 2, 5, 16}}, {{2, 1, 3}, {3, 2, 1}, {1, 2, 4, 12}},
      {{2, 3, 1}, {3, 1, 2}, {1, 2, 6, 23}}, {{2, 3, 1}, {3, 2, 1}, {1, 2, 5, 14}},
      {{3, 1, 2}, {3, 2, 1}, {1, 2, 4, 10}},
  };
  return rows;
}

struct SortTableRow {
  Word sigma;
  Word tau;
  std::vector<std::uint64_t> counts;  // n = 1..N
  bool catalan = false;               // counts equal C_1..C_N
  PublishedStatus published = PublishedStatus::unpublished;
  std::vector<std::array<std::uint64_t, 4>> published_counts;
};

struct SortTable {
  std::size_t max_n = 0;
  std::vector<SortTableRow> rows;  // 15 pairs, lexicographic (sigma < tau)

  const SortTableRow* find(const Word& sigma, const Word& tau) const {
    for (const auto& r : rows) {
      if (r.sigma == sigma && r.tau == tau) return &r;
    }
    return nullptr;
  }
};

namespace detail {

inline void classify_published(SortTableRow& row) {
  for (const PublishedRow& p : published_sort_counts()) {
    if (p.sigma == row.sigma && p.tau == row.tau) row.published_counts.push_back(p.counts);
  }
  const auto& pub = row.published_counts;
  if (pub.empty()) {
    row.published = PublishedStatus::unpublished;
    return;
  }
  if (pub.size() > 1) {
    const bool same = std::all_of(pub.begin(), pub.end(), [&](const auto& c) { return c == pub[0]; });
    row.published = same ? PublishedStatus::duplicated : PublishedStatus::conflicting;
    return;
  }
  const std::size_t m = std::min<std::size_t>(4, row.counts.size());
  bool equal = true;
  for (std::size_t i = 0; i < m; ++i) equal = equal && pub[0][i] == row.counts[i];
  row.published = equal ? PublishedStatus::match : PublishedStatus::mismatch;
}

}  // namespace detail

/// |sort_n(sigma, tau)| for n = 1..max_n over all 15 pairs of distinct
/// length-3 patterns, each row compared against the published values.
inline SortTable build_sort_table(std::size_t max_n, unsigned workers = 1) {
  check_size(max_n);
  SortTable table;
  table.max_n = max_n;
  const auto s3 = all_permutations(3);
  for (std::size_t a = 0; a < s3.size(); ++a) {
    for (std::size_t b = a + 1; b < s3.size(); ++b) {
      SortTableRow row;
      row.sigma = s3[a];
      row.tau = s3[b];
      row.catalan = true;
      for (std::size_t n = 1; n <= max_n; ++n) {
        row.counts.push_back(sort_count(s3[a], s3[b], n, workers));
        row.catalan = row.catalan && row.counts.back() == catalan(static_cast<unsigned>(n));
      }
      detail::classify_published(row);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace permstack
