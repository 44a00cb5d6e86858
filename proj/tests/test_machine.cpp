#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permstack/permstack.hpp"

using namespace permstack;

namespace {

Word W(std::string_view s) { return parse_word(s); }
PatternSet T(std::string_view s) { return parse_pattern_set(s); }

const std::vector<std::string> kSets = {"21", "123", "132", "123,132", "132,213", "213,231", "231,312"};

}  // namespace

TEST(Sort, ClassicalExamples) {
  const SortRun run = sort_with_trace(W("132"), T("21"));
  EXPECT_EQ(run.output, W("123"));
  EXPECT_EQ(run.moves.to_string(), "NXNNXX");
  EXPECT_EQ(stack_sort(W("231")), W("213"));
  EXPECT_EQ(stack_sort(W("2134")), W("1234"));
  EXPECT_EQ(stack_sort(W("3142")), W("1324"));
}

TEST(Sort, TwoPatternExample) {
  EXPECT_EQ(sort(W("52413"), T("123,132")), W("42315"));
  EXPECT_EQ(sort(W("321"), T("123")), W("213"));
  EXPECT_EQ(sort(W("312"), T("123")), W("213"));
}

TEST(Sort, EmptyAndSingleton) {
  EXPECT_EQ(sort(Word{}, T("123")), Word{});
  EXPECT_EQ(sort(W("1"), T("123")), W("1"));
  EXPECT_EQ(movement_sequence(W("1"), T("21")).to_string(), "NX");
}

TEST(Sort, ClassicalMatchesTextbookStackSort) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_permutation(n, [&](const Word& p) { ASSERT_EQ(stack_sort(p), oracle::west_stack_sort(p)) << p; });
  }
}

TEST(Sort, ShortInputsAreReversed) {
  // Words shorter than every pattern pass through the stack untouched.
  const PatternSet t = T("1234,4321");
  for (std::size_t n = 0; n <= 3; ++n) {
    for_each_permutation(n, [&](const Word& p) { ASSERT_EQ(sort(p, t), reverse(p)); });
  }
}

TEST(Trace, EventsFollowTheRun) {
  const SortRun run = sort_with_trace(W("52413"), T("123,132"));
  ASSERT_EQ(run.trace.size(), 10u);
  EXPECT_EQ(run.trace.front().step, Step::enter);
  EXPECT_EQ(run.trace.front().letter, 5);
  EXPECT_EQ(run.trace.front().stack, (std::vector<Letter>{5}));
  EXPECT_EQ(run.trace.back().stack, std::vector<Letter>{});
  EXPECT_EQ(Word(run.trace.back().output), run.output);
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    EXPECT_EQ(run.trace[i].step, run.moves[i]);
  }
}

TEST(Trace, StackAlwaysAvoidsPatternsAndMovesAreDyck) {
  for (const auto& spec : kSets) {
    const PatternSet t = T(spec);
    for (std::size_t n = 0; n <= 6; ++n) {
      for_each_permutation(n, [&](const Word& p) {
        const SortRun run = sort_with_trace(p, t);
        ASSERT_TRUE(run.moves.is_dyck());
        ASSERT_EQ(run.moves.semilength(), n);
        for (const TraceEvent& e : run.trace) {
          ASSERT_TRUE(avoids_set(Word(e.stack), t)) << spec << " " << p;
          ASSERT_EQ(e.stack.size() + e.output.size() <= n, true);
        }
      });
    }
  }
}

TEST(Trace, BottomOfStackLaw) {
  // For k >= 3 the first k-2 letters stay at the bottom of the stack until the
  // input is exhausted: they leave as the last k-2 outputs, reversed.
  for (const auto& spec : {"123", "132,213", "1234", "2143,3412"}) {
    const PatternSet t = T(spec);
    const std::size_t j = t.min_len() - 2;
    for (std::size_t n = j; n <= 7; ++n) {
      for_each_permutation(n, [&](const Word& p) {
        const Word out = sort(p, t);
        for (std::size_t i = 0; i < j; ++i) ASSERT_EQ(out[n - 1 - i], p[i]) << spec << " " << p;
      });
    }
  }
}

TEST(Clumping, Examples) {
  const auto c = t_clumping(W("731426"), T("123,132"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->segments, (std::vector<Word>{Word{}, W("7"), W("3"), W("1426")}));
  EXPECT_EQ(c->witness_pattern, W("123"));
  EXPECT_EQ(c->witness_indices, (std::vector<std::size_t>{0, 1, 2}));

  const auto d = t_clumping(W("321"), T("123"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->segments, (std::vector<Word>{Word{}, W("3"), W("2"), W("1")}));

  EXPECT_FALSE(t_clumping(W("123"), T("123")).has_value());
  EXPECT_FALSE(t_clumping(W("12"), T("123")).has_value());
}

TEST(Clumping, ColexOrder) {
  using V = std::vector<std::size_t>;
  EXPECT_TRUE(colex_less(V{0, 1, 3}, V{0, 2, 4}));
  EXPECT_TRUE(colex_less(V{2, 3}, V{0, 4}));
  EXPECT_TRUE(colex_less(V{1, 3}, V{2, 3}));
  EXPECT_FALSE(colex_less(V{2, 3}, V{2, 3}));
  EXPECT_TRUE(colex_less(V{3}, V{2, 3}));
}

TEST(Clumping, WitnessMatchesSubsetScanOracle) {
  for (const auto& spec : {"123", "132", "123,132", "213,231", "1243,312", "21"}) {
    const PatternSet t = T(spec);
    for (std::size_t n = 0; n <= 7; ++n) {
      for_each_permutation(n, [&](const Word& p) {
        const auto got = t_clumping(p, t);
        const auto want = oracle::colex_least_witness(p, t.patterns());
        ASSERT_EQ(got.has_value(), want.has_value()) << spec << " " << p;
        if (!got) return;
        ASSERT_EQ(got->witness_indices, want->indices) << spec << " " << p;
        ASSERT_EQ(got->witness_pattern, want->pattern) << spec << " " << p;
        // Segments reassemble the word.
        Word joined;
        for (const Word& s : got->segments) joined.append(s);
        ASSERT_EQ(joined, p);
      });
    }
  }
}

TEST(Clumping, RecursionReproducesTheMachine) {
  for (const auto& spec : kSets) {
    const PatternSet t = T(spec);
    for (std::size_t n = 0; n <= 7; ++n) {
      for_each_permutation(n, [&](const Word& p) { ASSERT_EQ(sort_recursive(p, t), sort(p, t)) << spec << " " << p; });
    }
  }
  EXPECT_EQ(sort(W("731426"), T("123,132")), W("346217"));
}

TEST(Movement, ParseAndDyck) {
  const auto m = MovementSequence::parse("NNXX");
  EXPECT_TRUE(m.is_dyck());
  EXPECT_EQ(m.semilength(), 2u);
  EXPECT_FALSE(MovementSequence::parse("NXXN").is_dyck());
  EXPECT_FALSE(MovementSequence::parse("NNX").is_dyck());
  EXPECT_THROW(MovementSequence::parse("NQ"), parse_error);
}

TEST(Movement, LegalSequences) {
  const auto m = MovementSequence::parse("NNNXNXNXXX");
  EXPECT_TRUE(is_legal_movement_sequence(m, 5, 4));
  EXPECT_TRUE(is_legal_movement_sequence(m, 5, 3));
  EXPECT_FALSE(is_legal_movement_sequence(m, 5, 5));
  EXPECT_FALSE(is_legal_movement_sequence(m, 4, 4));
  EXPECT_FALSE(is_legal_movement_sequence(MovementSequence::parse("NXNNXX"), 3, 4));
  EXPECT_TRUE(is_legal_movement_sequence(MovementSequence::parse("NNNXXX"), 3, 6));
  EXPECT_FALSE(is_legal_movement_sequence(MovementSequence::parse("NXNX"), 2, 5));
}

TEST(Movement, LegalCounts) {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto seqs = legal_movement_sequences(n, k);
      const std::size_t j = std::min(n, k - 2);
      ASSERT_EQ(seqs.size(), oracle::catalan(static_cast<unsigned>(n - j))) << n << " " << k;
      for (const auto& s : seqs) ASSERT_TRUE(is_legal_movement_sequence(s, n, k));
    }
  }
  EXPECT_EQ(legal_movement_sequences(6, 4).size(), 14u);
  EXPECT_EQ(dyck_sequences(4).size(), 14u);
}

TEST(Movement, EveryRunIsLegalAndReconstructs) {
  for (const auto& spec : kSets) {
    const PatternSet t = T(spec);
    for (std::size_t n = 0; n <= 6; ++n) {
      for_each_permutation(n, [&](const Word& p) {
        const MovementSequence m = movement_sequence(p, t);
        ASSERT_TRUE(is_legal_movement_sequence(m, n, t)) << spec << " " << p;
        ASSERT_EQ(reconstruct_input(sort(p, t), m), p) << spec << " " << p;
      });
    }
  }
}

TEST(Movement, ReconstructRoundTripOnS4) {
  const PatternSet t = T("213,231");
  std::set<std::string> seen;
  for (const Word& p : all_permutations(4)) {
    const SortRun run = sort_with_trace(p, t);
    EXPECT_EQ(reconstruct_input(run.output, run.moves), p);
    seen.insert(run.moves.to_string());
  }
  // Each movement sequence is one of the catalan(3) legal ones.
  EXPECT_LE(seen.size(), 5u);
}

TEST(Movement, ReconstructRejectsBadInput) {
  EXPECT_THROW(reconstruct_input(W("12"), MovementSequence::parse("NXNXNX")), std::invalid_argument);
  EXPECT_THROW(reconstruct_input(W("12"), MovementSequence::parse("XNNX")), std::invalid_argument);
}
