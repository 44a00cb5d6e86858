#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "permstack/catalan.hpp"
#include "permstack/dynamics/images.hpp"
#include "permstack/movement.hpp"
#include "permstack/stack_sort.hpp"

namespace permstack {

enum class PreimageStrategy {
  movement,     // reconstruct from every legal movement sequence, then re-check
  brute_force,  // filter all of S_n
};

/// catalan(n - k + 2): the most preimages any length-n permutation can have
/// under s_T when every pattern has length at least k.
inline std::uint64_t fertility_bound(std::size_t n, std::size_t k) {
  return catalan(static_cast<unsigned>(n - forced_prefix(n, k)));
}

/// { p : s_T(p) = target }, sorted lexicographically.
inline std::vector<Word> preimages(const Word& target, const PatternSet& t,
                                   PreimageStrategy strategy = PreimageStrategy::movement) {
  require_permutation(target, "preimage target");
  const std::size_t n = target.size();
  check_size(n);
  std::vector<Word> out;
  if (strategy == PreimageStrategy::movement) {
    // Distinct preimages have distinct movement sequences, but a reconstructed
    // candidate need not follow its sequence, hence the forward check.
    for (const MovementSequence& m : legal_movement_sequences(n, t.min_len())) {
      Word candidate = reconstruct_input(target, m);
      if (sort(candidate, t) == target) out.push_back(std::move(candidate));
    }
  } else {
    for_each_permutation(n, [&](const Word& p) {
      if (sort(p, t) == target) out.push_back(p);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct FertilityReport {
  PatternSet patterns;
  std::size_t n = 0;
  std::uint64_t max_count = 0;
  std::vector<Word> witnesses;  // every target reaching max_count, lexicographic
  std::uint64_t bound = 0;      // catalan(n - k + 2)
};

/// Largest preimage count over S_n, from one histogram pass over the images.
inline FertilityReport fertility_max(const PatternSet& t, std::size_t n, unsigned workers = 1) {
  const auto images = image_ranks(t, n, workers);
  std::vector<std::uint32_t> hist(images.size(), 0);
  for (PermRank r : images) ++hist[r];
  FertilityReport rep{t, n, 0, {}, fertility_bound(n, t.min_len())};
  rep.max_count = hist.empty() ? 0 : *std::max_element(hist.begin(), hist.end());
  for (PermRank r = 0; r < hist.size(); ++r) {
    if (hist[r] == rep.max_count) rep.witnesses.push_back(permutation_unrank(n, r));
  }
  return rep;
}

}  // namespace permstack
