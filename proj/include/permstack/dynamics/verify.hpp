#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "permstack/clumping.hpp"
#include "permstack/dynamics/bijectivity.hpp"
#include "permstack/dynamics/extremal.hpp"
#include "permstack/dynamics/machine.hpp"
#include "permstack/dynamics/orbits.hpp"
#include "permstack/dynamics/preimages.hpp"

namespace permstack {

// Finite theorem checks over S_n, n <= max_n, used by `permstack verify`.

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  std::vector<std::string> details;  // one line per checked configuration
  std::string failure;               // first failing case

  void fail(std::string what) {
    if (passed) failure = std::move(what);
    passed = false;
  }
};

struct VerifyOptions {
  std::size_t max_n = 7;
  unsigned workers = 1;
};

namespace detail {

template <typename... Args>
std::string cat_str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

inline std::vector<PatternSet> reduced_subsets_of_s3() {
  std::vector<PatternSet> out;
  const auto s3 = all_permutations(3);
  for (std::size_t a = 0; a < s3.size(); ++a) out.push_back(PatternSet{s3[a]});
  for (std::size_t a = 0; a < s3.size(); ++a) {
    for (std::size_t b = a + 1; b < s3.size(); ++b) out.push_back(PatternSet{s3[a], s3[b]});
  }
  return out;
}

}  // namespace detail

/// Brute-force preimage classes: entry r lists every p with s_T(p) of rank r.
inline std::vector<std::vector<Word>> all_preimages(const PatternSet& t, std::size_t n,
                                                    unsigned workers = 1) {
  const auto images = image_ranks(t, n, workers);
  std::vector<std::vector<Word>> classes(images.size());
  for (PermRank r = 0; r < images.size(); ++r) {
    classes[images[r]].push_back(permutation_unrank(n, r));
  }
  return classes;
}

inline SuiteResult verify_bijectivity(const VerifyOptions& o) {
  SuiteResult res{"bijectivity"};
  auto sets = detail::reduced_subsets_of_s3();
  sets.push_back(PatternSet{Word{2, 1}});
  for (const PatternSet& t : sets) {
    const bool criterion = bijectivity_criterion(t);
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      const BijectivityCheck check = verify_bijective(t, n, o.workers);
      // Below the minimum pattern length the map is plain reversal.
      const bool expected = n < t.min_len() ? true : criterion;
      if (check.bijective != expected) {
        res.fail(detail::cat_str(t, " n=", n, ": injective=", check.bijective,
                                 " criterion=", criterion));
      }
      if (criterion) {
        for_each_permutation(n, [&](const Word& p) {
          if (inverse_sort(sort(p, t), t) != p || sort(inverse_sort(p, t), t) != p) {
            res.fail(detail::cat_str(t, ": inverse fails at ", p));
          }
        });
      }
    }
    res.details.push_back(detail::cat_str(t, " criterion=", criterion ? "bijective" : "not bijective"));
  }
  return res;
}

inline SuiteResult verify_recursion(const VerifyOptions& o) {
  SuiteResult res{"recursion"};
  const std::vector<PatternSet> sets = {
      PatternSet{Word{2, 1}},  PatternSet{Word{1, 2, 3}},
      PatternSet{Word{1, 3, 2}}, PatternSet{Word{1, 2, 3}, Word{1, 3, 2}},
      PatternSet{Word{2, 1, 3}, Word{2, 3, 1}}, PatternSet{Word{2, 3, 1}, Word{3, 2, 1}},
  };
  for (const PatternSet& t : sets) {
    std::uint64_t checked = 0;
    for (std::size_t n = 0; n <= o.max_n; ++n) {
      for_each_permutation(n, [&](const Word& p) {
        ++checked;
        if (sort(p, t) != sort_recursive(p, t)) res.fail(detail::cat_str(t, ": differs at ", p));
      });
    }
    res.details.push_back(detail::cat_str(t, ": ", checked, " permutations agree"));
  }
  return res;
}

inline SuiteResult verify_bound(const VerifyOptions& o) {
  SuiteResult res{"bound"};
  const std::vector<PatternSet> sets = {
      PatternSet{Word{1, 2, 3}, Word{1, 3, 2}}, PatternSet{Word{2, 1, 3}, Word{2, 3, 1}},
      PatternSet{Word{2, 1, 3}}, PatternSet{Word{1, 3, 2}}, PatternSet{Word{2, 1}},
  };
  for (const PatternSet& t : sets) {
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      const auto classes = all_preimages(t, n, o.workers);
      const std::uint64_t bound = fertility_bound(n, t.min_len());
      std::uint64_t worst = 0;
      for (PermRank r = 0; r < classes.size(); ++r) {
        worst = std::max<std::uint64_t>(worst, classes[r].size());
        const Word gamma = permutation_unrank(n, r);
        if (classes[r].size() > bound) res.fail(detail::cat_str(t, ": ", gamma, " exceeds bound"));
        if (preimages(gamma, t, PreimageStrategy::movement) != classes[r]) {
          res.fail(detail::cat_str(t, ": strategies disagree at ", gamma));
        }
      }
      if (n == o.max_n) {
        res.details.push_back(detail::cat_str(t, " n=", n, ": max preimages ", worst, " <= ", bound));
      }
    }
  }
  return res;
}

inline SuiteResult verify_sharpness(const VerifyOptions& o) {
  SuiteResult res{"sharpness"};
  std::vector<Word> sigmas = all_permutations(3);
  for (Word& s : all_permutations(4)) sigmas.push_back(std::move(s));
  for (const Word& sigma : sigmas) {
    const PatternSet t{sigma};
    const std::size_t k = sigma.size();
    const bool consecutive = has_consecutive_lead(sigma);
    for (std::size_t n = k; n <= o.max_n; ++n) {
      const FertilityReport rep = fertility_max(t, n, o.workers);
      if (rep.max_count > rep.bound) res.fail(detail::cat_str(sigma, " n=", n, ": above bound"));
      if (consecutive) {
        const Word m = mu(sigma, n);
        const bool witness = std::binary_search(rep.witnesses.begin(), rep.witnesses.end(), m);
        if (rep.max_count != rep.bound || !witness) {
          res.fail(detail::cat_str(sigma, " n=", n, ": max ", rep.max_count, " != ", rep.bound,
                                   " or mu=", m, " not a witness"));
        }
        if (preimages(m, t) != p_set(sigma, n)) {
          res.fail(detail::cat_str(sigma, " n=", n, ": preimages(mu) != P"));
        }
      } else if (n > k && rep.max_count >= rep.bound) {
        res.fail(detail::cat_str(sigma, " n=", n, ": bound attained"));
      } else if (n == k && rep.max_count == rep.bound) {
        res.details.push_back(detail::cat_str(sigma, " n=k=", n, ": bound ", rep.bound,
                                              " attained at the boundary"));
      }
    }
  }
  // Identity preimages under s_{213,tau} and the extremes of s_{213,231}.
  for (const Word& tau : {Word{2, 3, 1}, Word{3, 2, 1}}) {
    const PatternSet t{Word{2, 1, 3}, tau};
    for (std::size_t n = 2; n <= o.max_n; ++n) {
      std::vector<Word> expected;
      for (const Word& rho : enumerate_avoiders(n - 1, {Word{2, 3, 1}})) {
        std::vector<Letter> p{static_cast<Letter>(n)};
        p.insert(p.end(), rho.begin(), rho.end());
        expected.emplace_back(std::move(p));
      }
      if (preimages(Word::identity(n), t) != expected) {
        res.fail(detail::cat_str(t, " n=", n, ": identity preimages are not n.rho"));
      }
    }
  }
  const PatternSet t213{Word{2, 1, 3}, Word{2, 3, 1}};
  for (std::size_t n = 3; n <= o.max_n; ++n) {
    const FertilityReport rep = fertility_max(t213, n, o.workers);
    const std::vector<Word> expected{Word::identity(n), Word::reverse_identity(n)};
    if (rep.max_count != catalan(static_cast<unsigned>(n - 1)) || rep.witnesses != expected) {
      res.fail(detail::cat_str(t213, " n=", n, ": maximum not attained exactly at id, id^r"));
    }
  }
  res.details.push_back(detail::cat_str("checked ", sigmas.size(), " patterns and the 213-machine"));
  return res;
}

inline SuiteResult verify_periodic(const VerifyOptions& o) {
  SuiteResult res{"periodic"};
  const PatternSet t{Word{1, 2, 3}, Word{1, 3, 2}};
  const PatternSet tc{Word{3, 1, 2}, Word{3, 2, 1}};
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    const auto cycles = orbit_partition(t, n, o.workers);
    std::vector<Word> periodic;
    for (const auto& c : cycles) periodic.insert(periodic.end(), c.begin(), c.end());
    std::sort(periodic.begin(), periodic.end());
    std::vector<Word> half_dec;
    std::vector<Word> half_inc;
    for_each_permutation(n, [&](const Word& p) {
      if (is_half_decreasing(p)) {
        half_dec.push_back(p);
        if (half_decreasing_step(p) != sort(p, t)) {
          res.fail(detail::cat_str("closed form differs at ", p));
        }
      }
      if (is_half_increasing(p)) half_inc.push_back(p);
    });
    const std::size_t len = (n + 2) / 2;  // ceil((n+1)/2)
    if (periodic != half_dec) res.fail(detail::cat_str("n=", n, ": periodic set != half-decreasing"));
    if (half_dec.size() != factorial(static_cast<unsigned>(len))) {
      res.fail(detail::cat_str("n=", n, ": half-decreasing count ", half_dec.size()));
    }
    for (const auto& c : cycles) {
      if (c.size() != len) res.fail(detail::cat_str("n=", n, ": cycle of length ", c.size()));
    }
    if (cycles.size() != factorial(static_cast<unsigned>(n / 2))) {
      res.fail(detail::cat_str("n=", n, ": ", cycles.size(), " orbits"));
    }
    if (periodic_points(tc, n, o.workers) != half_inc) {
      res.fail(detail::cat_str("n=", n, ": {312,321} periodic set != half-increasing"));
    }
    // Every trajectory is eventually half-decreasing.
    for_each_permutation(n, [&](const Word& p) {
      Word x = p;
      for (std::uint64_t step = 0; !is_half_decreasing(x); ++step) {
        if (step > factorial(static_cast<unsigned>(n))) {
          res.fail(detail::cat_str("n=", n, ": ", p, " never becomes half-decreasing"));
          break;
        }
        x = sort(x, t);
      }
    });
    res.details.push_back(detail::cat_str("n=", n, ": ", periodic.size(), " periodic points, ",
                                          cycles.size(), " orbit(s) of length ", len));
  }
  return res;
}

inline SuiteResult verify_complement(const VerifyOptions& o) {
  SuiteResult res{"complement"};
  const std::vector<PatternSet> sets = {
      PatternSet{Word{1, 2, 3}, Word{1, 3, 2}}, PatternSet{Word{2, 1, 3}}, PatternSet{Word{2, 1}}};
  for (const PatternSet& t : sets) {
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      if (auto bad = complement_conjugation_counterexample(t, n)) {
        res.fail(detail::cat_str(t, ": fails at ", *bad));
      }
    }
    res.details.push_back(detail::cat_str(t, " vs ", t.complemented(), ": conjugate"));
  }
  return res;
}

inline SuiteResult verify_machine_catalan(const VerifyOptions& o) {
  SuiteResult res{"machine-catalan"};
  for (const Word& sigma : {Word{1, 2, 3}, Word{1, 3, 2}, Word{2, 3, 1}}) {
    std::ostringstream counts;
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      const std::uint64_t c = sort_count(sigma, hat(sigma), n, o.workers);
      counts << (n > 1 ? "," : "") << c;
      if (c != catalan(static_cast<unsigned>(n))) {
        res.fail(detail::cat_str("(", sigma, ",", hat(sigma), ") n=", n, ": ", c));
      }
    }
    res.details.push_back(detail::cat_str("(", sigma, ",", hat(sigma), "): ", counts.str()));
  }
  return res;
}

inline SuiteResult verify_conjectures(const VerifyOptions& o) {
  SuiteResult res{"conjectures"};
  for (const PatternSet& t :
       {PatternSet{Word{1, 3, 2}, Word{2, 1, 3}}, PatternSet{Word{2, 3, 1}, Word{2, 1, 3}}}) {
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      const ConjectureCheck c = conjecture_trivial_periodics(t, n, o.workers);
      if (!c.holds) res.fail(detail::cat_str(t, " n=", n, ": counterexample ", *c.counterexample));
    }
    res.details.push_back(detail::cat_str(t, ": periodic points within {id, id^r} up to n=", o.max_n));
  }
  return res;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& verify_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"bijectivity", verify_bijectivity}, {"recursion", verify_recursion},
      {"bound", verify_bound},             {"sharpness", verify_sharpness},
      {"periodic", verify_periodic},       {"complement", verify_complement},
      {"machine-catalan", verify_machine_catalan}, {"conjectures", verify_conjectures},
  };
  return suites;
}

}  // namespace permstack
