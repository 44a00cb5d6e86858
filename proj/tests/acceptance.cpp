// Acceptance checks. Run with a criterion number (1-12) or with no argument
// for all of them. Prints one [PASS]/[FAIL] line per criterion; exit status is
// nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permstack/permstack.hpp"

using namespace permstack;

namespace {

Word W(std::string_view s) { return parse_word(s); }
PatternSet T(std::string_view s) { return parse_pattern_set(s); }

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::string counts_str(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Outcome figure_one() {
  Outcome o;
  const SortRun run = sort_with_trace(W("132"), T("21"));
  o.check(run.output == W("123"), str("sort(132,{21}) = ", run.output));
  o.check(run.moves.to_string() == "NXNNXX", "moves " + run.moves.to_string());
  return o;
}

Outcome sort_table() {
  Outcome o;
  struct Row {
    const char* sigma;
    const char* tau;
    std::vector<std::uint64_t> counts;
  };
  const std::vector<Row> listed = {
      {"123", "132", {1, 2, 5, 14}}, {"123", "213", {1, 2, 5, 14}}, {"132", "312", {1, 2, 5, 14}},
      {"231", "321", {1, 2, 5, 14}}, {"123", "321", {1, 2, 4, 7}},  {"132", "213", {1, 2, 5, 15}},
      {"123", "312", {1, 2, 5, 15}}, {"132", "321", {1, 2, 4, 10}}, {"312", "321", {1, 2, 4, 10}},
      {"231", "312", {1, 2, 6, 23}},
  };
  const SortTable table = build_sort_table(4);
  o.check(table.rows.size() == 15, "row count");
  for (const Row& r : listed) {
    const SortTableRow* row = table.find(W(r.sigma), W(r.tau));
    if (!row) {
      o.check(false, str("missing row ", r.sigma, ",", r.tau));
      continue;
    }
    o.check(row->counts == r.counts, str("(", r.sigma, ",", r.tau, ") computed ", counts_str(row->counts),
                                          ", listed ", counts_str(r.counts)));
  }
  for (const auto& [s, t] : std::vector<std::pair<const char*, const char*>>{{"123", "231"}, {"213", "231"}}) {
    const SortTableRow* row = table.find(W(s), W(t));
    const bool flagged = row && (row->published == PublishedStatus::duplicated ||
                                 row->published == PublishedStatus::conflicting);
    o.check(flagged, str("(", s, ",", t, ") not flagged"));
    if (row) {
      std::string printed;
      for (const auto& pc : row->published_counts) {
        printed += " " + counts_str(std::vector<std::uint64_t>(pc.begin(), pc.end()));
      }
      o.note(str("(", s, ",", t, ") computed ", counts_str(row->counts), ", ", to_string(row->published),
                 ", printed", printed));
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const SortTable big = build_sort_table(7);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.check(big.rows.size() == 15 && secs < 60.0, str("n<=7 table took ", secs, " s"));
  return o;
}

Outcome catalan_machines() {
  Outcome o;
  for (const char* s : {"123", "132", "231"}) {
    const Word sigma = W(s);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto c = sort_count(sigma, hat(sigma), n);
      o.check(c == catalan(static_cast<unsigned>(n)), str("(", sigma, ",", hat(sigma), ") n=", n, ": ", c));
    }
  }
  return o;
}

std::vector<PatternSet> small_reduced_sets() {
  std::vector<PatternSet> out;
  const auto s3 = all_permutations(3);
  for (std::size_t a = 0; a < s3.size(); ++a) out.push_back(PatternSet{s3[a]});
  for (std::size_t a = 0; a < s3.size(); ++a) {
    for (std::size_t b = a + 1; b < s3.size(); ++b) out.push_back(PatternSet{s3[a], s3[b]});
  }
  return out;
}

Outcome bijectivity() {
  Outcome o;
  int bijective_sets = 0;
  for (const PatternSet& t : small_reduced_sets()) {
    const bool crit = bijectivity_criterion(t);
    for (std::size_t n = 1; n <= 7; ++n) {
      const bool inj = verify_bijective(t, n).bijective;
      // Below the pattern length the stack never blocks, so the map is reversal.
      const bool expected = n < t.min_len() ? true : crit;
      o.check(inj == expected, str(t, " n=", n, " injective=", inj, " criterion=", crit));
    }
    if (!crit) continue;
    ++bijective_sets;
    bool round = true;
    for_each_permutation(7, [&](const Word& p) {
      round = round && inverse_sort(sort(p, t), t) == p && sort(inverse_sort(p, t), t) == p;
    });
    o.check(round, str("inverse round trip ", t));
  }
  o.note(str(small_reduced_sets().size(), " sets, ", bijective_sets, " bijective"));
  return o;
}

Outcome recursion() {
  Outcome o;
  for (const char* spec : {"21", "123", "132", "123,132", "213,231", "231,321"}) {
    const PatternSet t = T(spec);
    for (std::size_t n = 0; n <= 7; ++n) {
      bool same = true;
      for_each_permutation(n, [&](const Word& p) { same = same && sort_recursive(p, t) == sort(p, t); });
      o.check(same, str(t, " n=", n));
    }
  }
  return o;
}

Outcome preimage_bound() {
  Outcome o;
  for (const char* spec : {"123,132", "213,231", "213"}) {
    const PatternSet t = T(spec);
    const std::uint64_t bound = catalan(static_cast<unsigned>(6 - t.min_len() + 2));
    std::uint64_t best = 0;
    for_each_permutation(6, [&](const Word& g) {
      const auto a = preimages(g, t, PreimageStrategy::movement);
      const auto b = preimages(g, t, PreimageStrategy::brute_force);
      o.check(a == b, str(t, " strategies differ at ", g));
      o.check(a.size() <= bound, str(t, " ", g, " has ", a.size(), " preimages"));
      best = std::max<std::uint64_t>(best, a.size());
    });
    o.note(str(t, ": max ", best, " <= ", bound));
  }
  return o;
}

Outcome sharpness() {
  Outcome o;
  for (std::size_t k = 3; k <= 4; ++k) {
    const std::size_t top = k == 3 ? 7 : 8;
    for (const Word& s : all_permutations(k)) {
      const PatternSet t{s};
      const bool consecutive = has_consecutive_lead(s);
      for (std::size_t n = k; n <= top; ++n) {
        const FertilityReport rep = fertility_max(t, n);
        const std::uint64_t bound = catalan(static_cast<unsigned>(n - k + 2));
        if (consecutive) {
          const Word m = mu(s, n);
          o.check(rep.max_count == bound, str(s, " n=", n, " max ", rep.max_count, " bound ", bound));
          o.check(std::find(rep.witnesses.begin(), rep.witnesses.end(), m) != rep.witnesses.end(),
                  str(s, " n=", n, " mu=", m, " not a witness"));
          o.check(preimages(m, t) == p_set(s, n), str(s, " n=", n, " preimages(mu) != P"));
        } else if (n > k) {
          o.check(rep.max_count < bound, str(s, " n=", n, " max ", rep.max_count, " reaches ", bound));
        } else if (rep.max_count == bound) {
          o.note(str(s, " attains ", bound, " at n=k=", n));
        }
      }
    }
  }
  return o;
}

Outcome identity_preimages() {
  Outcome o;
  for (const char* tau : {"231", "321"}) {
    const PatternSet t{W("213"), W(tau)};
    for (std::size_t n = 3; n <= 7; ++n) {
      std::vector<Word> want;
      for (const Word& rho : enumerate_avoiders(n - 1, {W("231")})) {
        Word p{static_cast<Letter>(n)};
        p.append(rho);
        want.push_back(p);
      }
      std::sort(want.begin(), want.end());
      const auto got = preimages(Word::identity(n), t);
      o.check(got == want, str(t, " n=", n, " preimages(id) size ", got.size()));
      o.check(got.size() == catalan(static_cast<unsigned>(n - 1)), str(t, " n=", n, " count"));
    }
  }
  for (std::size_t n = 3; n <= 7; ++n) {
    const FertilityReport rep = fertility_max(T("213,231"), n);
    const std::vector<Word> expect = {Word::identity(n), Word::reverse_identity(n)};
    o.check(rep.witnesses == expect, str("{213,231} n=", n, " maximum attained at ", rep.witnesses.size(),
                                         " targets"));
  }
  return o;
}

Outcome complement_conjugation() {
  Outcome o;
  for (const char* spec : {"123,132", "213", "21"}) {
    const PatternSet t = T(spec);
    const PatternSet tc = t.complemented();
    for_each_permutation(6, [&](const Word& p) {
      o.check(sort(complement(p), tc) == complement(sort(p, t)), str(t, " at ", p));
    });
  }
  return o;
}

std::uint64_t fact(std::uint64_t n) { return n <= 1 ? 1 : n * fact(n - 1); }

Outcome periodic_structure() {
  Outcome o;
  const PatternSet t = T("123,132");
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Word> half;
    for_each_permutation(n, [&](const Word& p) {
      if (is_half_decreasing(p)) half.push_back(p);
    });
    const auto points = periodic_points(t, n);
    const auto cycles = orbit_partition(t, n);
    const std::size_t len = (n + 2) / 2;  // ceil((n+1)/2)
    o.check(points == half, str("n=", n, " periodic points != half-decreasing set"));
    o.check(half.size() == fact(len), str("n=", n, " half-decreasing count ", half.size()));
    o.check(cycles.size() == fact(n / 2), str("n=", n, " orbit count ", cycles.size()));
    for (const auto& c : cycles) o.check(c.size() == len, str("n=", n, " cycle length ", c.size()));
    for (const Word& p : half) {
      o.check(half_decreasing_step(p) == sort(p, t), str("closed form differs at ", p));
    }
  }
  bool absorbed = true;
  for_each_permutation(7, [&](const Word& p) {
    Word x = p;
    for (int i = 0; i < 5040 && !is_half_decreasing(x); ++i) x = sort(x, t);
    absorbed = absorbed && is_half_decreasing(x);
  });
  o.check(absorbed, "some p in S_7 never reaches a half-decreasing permutation");
  return o;
}

Outcome half_increasing() {
  Outcome o;
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Word> want;
    for_each_permutation(n, [&](const Word& p) {
      if (is_half_increasing(p)) want.push_back(p);
    });
    o.check(periodic_points(T("312,321"), n) == want, str("n=", n));
  }
  return o;
}

Outcome conjectures() {
  Outcome o;
  for (const char* spec : {"132,213", "231,213"}) {
    const PatternSet t = T(spec);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
      const ConjectureCheck c = conjecture_trivial_periodics(t, n);
      if (!c.holds) {
        o.check(false, str(t, " n=", n, " counterexample ", *c.counterexample));
        break;
      }
      checked = n;
    }
    o.note(str(t, ": trivial periodic points through n=", checked));
  }
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"classical example sort(132,{21}) = 123, NXNNXX", figure_one},
      {"machine sort counts n=1..4 match the printed table", sort_table},
      {"sort_count(sigma, hat(sigma), n) = catalan(n), n<=6", catalan_machines},
      {"bijectivity criterion vs exhaustive injectivity, n<=7", bijectivity},
      {"clumping recursion equals the machine, n<=7", recursion},
      {"preimage strategies agree and respect the bound on S_6", preimage_bound},
      {"fertility bound attained iff leading entries consecutive", sharpness},
      {"identity preimages of the {213,tau} machines", identity_preimages},
      {"complement conjugation on S_6", complement_conjugation},
      {"periodic structure of s_{123,132}, n=3..8", periodic_structure},
      {"periodic points of s_{312,321} are half-increasing, n<=7", half_increasing},
      {"trivial periodic points for {132,213} and {231,213}, n<=7", conjectures},
  };
  return all;
}

bool run_one(std::size_t idx) {
  const Criterion& c = criteria()[idx - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out.ok = false;
    out.notes.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %zu. %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", idx, c.title, secs);
  for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return out.ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t total = criteria().size();
  std::vector<std::size_t> selected;
  if (argc > 1) {
    const long v = std::strtol(argv[1], nullptr, 10);
    if (v < 1 || static_cast<std::size_t>(v) > total) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], total);
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(v));
  } else {
    for (std::size_t i = 1; i <= total; ++i) selected.push_back(i);
  }
  bool ok = true;
  for (std::size_t i : selected) ok = run_one(i) && ok;
  return ok ? 0 : 1;
}
