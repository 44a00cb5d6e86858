#pragma once

#include <optional>
#include <vector>

#include "permstack/dynamics/images.hpp"
#include "permstack/stack_sort.hpp"

namespace permstack {

inline void require_reduced(const PatternSet& t) {
  if (!t.is_reduced()) throw pattern_error("pattern set " + t.to_string() + " is not reduced");
}

/// For reduced T: s_T is a bijection iff hat(sigma) is in T for every sigma in T.
inline bool bijectivity_criterion(const PatternSet& t) {
  require_reduced(t);
  for (const Word& s : t) {
    if (!t.contains_pattern(hat(s))) return false;
  }
  return true;
}

struct Collision {
  Word first;   // lexicographically smaller input
  Word second;
  Word image;
};

struct BijectivityCheck {
  bool bijective = true;
  std::optional<Collision> collision;  // set iff !bijective

  explicit operator bool() const noexcept { return bijective; }
};

/// Exhaustive injectivity test of s_T on S_n. The reported collision is the
/// first one met in lexicographic order of the later input.
inline BijectivityCheck verify_bijective(const PatternSet& t, std::size_t n, unsigned workers = 1) {
  const auto images = image_ranks(t, n, workers);
  constexpr PermRank kUnseen = ~PermRank{0};
  std::vector<PermRank> source(images.size(), kUnseen);
  for (PermRank r = 0; r < images.size(); ++r) {
    PermRank& s = source[images[r]];
    if (s != kUnseen) {
      return BijectivityCheck{false, Collision{permutation_unrank(n, s), permutation_unrank(n, r),
                                               permutation_unrank(n, images[r])}};
    }
    s = r;
  }
  return {};
}

/// r o s_T o r, the inverse of s_T whenever the criterion holds.
inline Word inverse_sort(const Word& p, const PatternSet& t) {
  if (!bijectivity_criterion(t)) {
    throw pattern_error("s_T is not bijective for " + t.to_string());
  }
  return reverse(sort(reverse(p), t));
}

/// Checks s_{T^c}(p^c) = s_T(p)^c over S_n; returns the first failing p.
inline std::optional<Word> complement_conjugation_counterexample(const PatternSet& t,
                                                                 std::size_t n) {
  const PatternSet tc = t.complemented();
  std::optional<Word> bad;
  check_size(n);
  for_each_permutation(n, [&](const Word& p) {
    if (!bad && sort(complement(p), tc) != complement(sort(p, t))) bad = p;
  });
  return bad;
}

inline bool complement_conjugation_check(const PatternSet& t, std::size_t n) {
  return !complement_conjugation_counterexample(t, n).has_value();
}

}  // namespace permstack
