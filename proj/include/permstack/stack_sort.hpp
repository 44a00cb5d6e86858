#pragma once

#include <cstddef>
#include <vector>

#include "permstack/movement.hpp"
#include "permstack/pattern.hpp"
#include "permstack/word.hpp"

namespace permstack {

// One machine step and the state right after it.
struct TraceEvent {
  Step step = Step::enter;
  Letter letter = 0;
  std::vector<Letter> stack;  // top to bottom
  std::vector<Letter> output;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct SortRun {
  Word output;
  MovementSequence moves;
  std::vector<TraceEvent> trace;
};

namespace detail {

// Runs the machine; Observer is called after every step with
// (step, letter, stack bottom-to-top, output).
template <typename Observer>
Word run_machine(const Word& input, const PatternSet& t, Observer&& observe) {
  std::vector<Letter> stack;  // bottom to top
  std::vector<Letter> out;
  std::vector<Letter> probe;  // candidate + stack, read top to bottom
  stack.reserve(input.size());
  out.reserve(input.size());
  probe.reserve(input.size() + 1);
  std::size_t next = 0;
  while (next < input.size() || !stack.empty()) {
    bool push = false;
    if (next < input.size()) {
      probe.clear();
      probe.push_back(input[next]);
      probe.insert(probe.end(), stack.rbegin(), stack.rend());
      push = avoids_set(std::span<const Letter>(probe), t);
      // An empty stack always accepts: every pattern has length >= 2.
    }
    if (push) {
      stack.push_back(input[next]);
      observe(Step::enter, input[next++], stack, out);
    } else {
      out.push_back(stack.back());
      stack.pop_back();
      observe(Step::exit, out.back(), stack, out);
    }
  }
  return Word(std::move(out));
}

}  // namespace detail

/// s_T: push the next input letter whenever the stack, read top to bottom
/// with that letter on top, still avoids every pattern of T; otherwise pop the
/// top to the output. Once the input is exhausted the stack is emptied.
inline Word sort(const Word& input, const PatternSet& t) {
  return detail::run_machine(input, t, [](Step, Letter, const auto&, const auto&) {});
}

inline SortRun sort_with_trace(const Word& input, const PatternSet& t) {
  SortRun run;
  run.output = detail::run_machine(
      input, t,
      [&](Step step, Letter letter, const std::vector<Letter>& stack,
          const std::vector<Letter>& out) {
        run.moves.push_back(step);
        run.trace.push_back(
            TraceEvent{step, letter, std::vector<Letter>(stack.rbegin(), stack.rend()), out});
      });
  return run;
}

inline MovementSequence movement_sequence(const Word& input, const PatternSet& t) {
  MovementSequence m;
  detail::run_machine(input, t, [&](Step step, Letter, const auto&, const auto&) {
    m.push_back(step);
  });
  return m;
}

// Classical West stack sort, the {21} machine.
inline const PatternSet& classical_patterns() {
  static const PatternSet t{Word{2, 1}};
  return t;
}

inline Word stack_sort(const Word& input) { return sort(input, classical_patterns()); }

}  // namespace permstack
