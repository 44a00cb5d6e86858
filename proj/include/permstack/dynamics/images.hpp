#pragma once

#include <cstdint>
#include <vector>

#include "permstack/enumerate.hpp"
#include "permstack/stack_sort.hpp"

namespace permstack {

/// The functional graph of s_T on S_n: entry r is the rank of s_T applied to
/// the permutation of rank r.
inline std::vector<PermRank> image_ranks(const PatternSet& t, std::size_t n, unsigned workers = 1) {
  check_size(n);
  const std::uint64_t total = factorial(static_cast<unsigned>(n));
  std::vector<PermRank> images(total);
  parallel_ranges(total, workers, [&](std::uint64_t first, std::uint64_t last) {
    for_each_permutation_in(n, first, last, [&](std::uint64_t r, const Word& p) {
      images[r] = permutation_rank(sort(p, t));
    });
  });
  return images;
}

/// |{ s_T(p) : p in S_n }|.
inline std::uint64_t image_size(const PatternSet& t, std::size_t n, unsigned workers = 1) {
  const auto images = image_ranks(t, n, workers);
  std::vector<bool> hit(images.size(), false);
  std::uint64_t count = 0;
  for (PermRank r : images) {
    if (!hit[r]) {
      hit[r] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace permstack
