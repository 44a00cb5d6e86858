#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "permstack/errors.hpp"
#include "permstack/pattern.hpp"
#include "permstack/word.hpp"

namespace permstack {

enum class Step : char { enter = 'N', exit = 'X' };

// The N/X record of one run of the machine.
class MovementSequence {
 public:
  MovementSequence() = default;
  explicit MovementSequence(std::vector<Step> steps) : steps_(std::move(steps)) {}

  static MovementSequence parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
      if (c == 'N') {
        steps.push_back(Step::enter);
      } else if (c == 'X') {
        steps.push_back(Step::exit);
      } else {
        throw parse_error("movement sequence '" + std::string(text) + "' may contain only N and X");
      }
    }
    return MovementSequence(std::move(steps));
  }

  std::size_t size() const noexcept { return steps_.size(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }
  void push_back(Step s) { steps_.push_back(s); }

  // Every prefix has at least as many N as X, and the totals agree.
  bool is_dyck() const {
    std::ptrdiff_t height = 0;
    for (Step s : steps_) {
      height += s == Step::enter ? 1 : -1;
      if (height < 0) return false;
    }
    return height == 0;
  }

  std::size_t semilength() const { return steps_.size() / 2; }

  std::string to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(static_cast<char>(st));
    return s;
  }

  friend bool operator==(const MovementSequence&, const MovementSequence&) = default;
  friend auto operator<=>(const MovementSequence& a, const MovementSequence& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::vector<Step> steps_;
};

inline std::ostream& operator<<(std::ostream& os, const MovementSequence& m) {
  return os << m.to_string();
}

/// Number of forced leading N (and trailing X) steps when every pattern has
/// length at least k: the bottom k-2 letters never leave early. Clamped to n
/// for inputs too short to fill that many slots.
inline std::size_t forced_prefix(std::size_t n, std::size_t k) {
  return std::min(n, k >= 2 ? k - 2 : std::size_t{0});
}

/// Shape N^{k-2} m X^{k-2} with m itself a Dyck word, semilength n.
inline bool is_legal_movement_sequence(const MovementSequence& m, std::size_t n, std::size_t k) {
  if (m.size() != 2 * n || !m.is_dyck()) return false;
  const std::size_t j = forced_prefix(n, k);
  for (std::size_t i = 0; i < j; ++i) {
    if (m[i] != Step::enter || m[m.size() - 1 - i] != Step::exit) return false;
  }
  // The middle part must itself be a Dyck word (never dips below height j).
  std::ptrdiff_t height = 0;
  for (std::size_t i = j; i + j < m.size(); ++i) {
    height += m[i] == Step::enter ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

inline bool is_legal_movement_sequence(const MovementSequence& m, std::size_t n,
                                       const PatternSet& t) {
  return is_legal_movement_sequence(m, n, t.min_len());
}

namespace detail {

inline void dyck_words(std::size_t open, std::size_t close, std::vector<Step>& cur,
                       std::vector<std::vector<Step>>& out) {
  if (open == 0 && close == 0) {
    out.push_back(cur);
    return;
  }
  if (open > 0) {
    cur.push_back(Step::enter);
    dyck_words(open - 1, close + 1, cur, out);
    cur.pop_back();
  }
  if (close > 0) {
    cur.push_back(Step::exit);
    dyck_words(open, close - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All Dyck words of the given semilength, N before X lexicographically.
inline std::vector<MovementSequence> dyck_sequences(std::size_t semilength) {
  std::vector<std::vector<Step>> raw;
  std::vector<Step> cur;
  detail::dyck_words(semilength, 0, cur, raw);
  std::vector<MovementSequence> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

/// Every legal sequence of semilength n for minimum pattern length k;
/// catalan(n - k + 2) of them once n >= k - 2.
inline std::vector<MovementSequence> legal_movement_sequences(std::size_t n, std::size_t k) {
  const std::size_t j = forced_prefix(n, k);
  std::vector<MovementSequence> out;
  for (const MovementSequence& inner : dyck_sequences(n - j)) {
    std::vector<Step> steps(j, Step::enter);
    steps.insert(steps.end(), inner.begin(), inner.end());
    steps.insert(steps.end(), j, Step::exit);
    out.emplace_back(std::move(steps));
  }
  return out;
}

/// Replays m backwards from the final state (empty input, empty stack,
/// output `out`). The result is the only input that m could have turned into
/// `out`; whether the greedy machine really follows m on it is for the caller
/// to check.
inline Word reconstruct_input(const Word& out, const MovementSequence& m) {
  if (!m.is_dyck() || m.semilength() != out.size()) {
    throw std::invalid_argument("reconstruct_input needs a Dyck sequence of semilength " +
                                std::to_string(out.size()));
  }
  std::vector<Letter> output = out.vector();
  std::vector<Letter> stack;
  std::deque<Letter> input;
  for (auto it = m.end(); it != m.begin();) {
    --it;
    if (*it == Step::exit) {
      stack.push_back(output.back());
      output.pop_back();
    } else {
      input.push_front(stack.back());
      stack.pop_back();
    }
  }
  return Word(input.begin(), input.end());
}

}  // namespace permstack
