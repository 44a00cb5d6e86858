// permstack: command-line front end for the pattern-avoiding stack sorting
// library. Run `permstack --help` for the subcommands.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 unparsable input,
// 3 invalid pattern set, 4 size cap exceeded.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permstack/json.hpp"
#include "permstack/permstack.hpp"

namespace {

using namespace permstack;
using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kPatternError = 3,
  kCapExceeded = 4,
};

constexpr unsigned kDefaultCap = 8;

struct RunConfig {
  std::string patterns;
  std::string perm;
  std::size_t n = 0;
  std::size_t max_n = 7;
  std::string format = "text";
  std::string suite = "all";
  bool trace = false;
  unsigned parallel = 1;
};

unsigned size_cap() {
  const char* env = std::getenv("PERMSTACK_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  const std::string s(detail::trim(env));
  unsigned v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw parse_error("PERMSTACK_MAX_N must be a non-negative integer");
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > 1000) break;
  }
  return std::min(v, kHardMaxN);
}

void check_cap(std::size_t n) { check_size(n, size_cap()); }

// Columns padded to their widest cell.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string word_list(const std::vector<Word>& ws, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += sep;
    s += to_string(ws[i]);
  }
  return s;
}

int cmd_sort(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  const Word w = parse_word(c.perm);
  const SortRun run = sort_with_trace(w, t);
  if (c.trace) {
    for (const TraceEvent& e : run.trace) std::cout << trace_event_json(e).dump() << '\n';
    return kOk;
  }
  if (c.format == "json") {
    std::cout << json{{"patterns", t}, {"input", w}, {"output", run.output},
                      {"moves", run.moves.to_string()}}.dump(2)
              << '\n';
  } else {
    std::cout << run.output << '\n';
  }
  return kOk;
}

int cmd_inverse(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  const Word p = parse_permutation(c.perm);
  const Word inv = inverse_sort(p, t);
  if (c.format == "json") {
    std::cout << json{{"patterns", t}, {"input", p}, {"inverse", inv}}.dump(2) << '\n';
  } else {
    std::cout << inv << '\n';
  }
  return kOk;
}

int cmd_clump(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  const Word w = parse_word(c.perm);
  const auto cl = t_clumping(w, t);
  if (c.format == "json") {
    std::cout << (cl ? json(*cl) : json(nullptr)).dump(2) << '\n';
    return kOk;
  }
  if (!cl) {
    std::cout << "none (" << w << " avoids every reversed pattern)\n";
    return kOk;
  }
  for (std::size_t i = 0; i < cl->segments.size(); ++i) {
    std::cout << (i ? " " : "") << 'a' << i << '='
              << (cl->segments[i].empty() ? std::string("e") : to_string(cl->segments[i]));
  }
  std::cout << "  witness " << cl->witness_pattern << '\n';
  return kOk;
}

int cmd_table(const RunConfig& c) {
  check_cap(c.max_n);
  const SortTable table = build_sort_table(c.max_n, c.parallel);
  auto note = [](const SortTableRow& r) -> std::string {
    switch (r.published) {
      case PublishedStatus::match:
      case PublishedStatus::unpublished:
        return r.published == PublishedStatus::match ? "" : "not in published table";
      case PublishedStatus::mismatch:
      case PublishedStatus::duplicated:
      case PublishedStatus::conflicting: {
        std::string s = std::string(to_string(r.published)) + " published";
        for (const auto& pc : r.published_counts) {
          s += " [";
          for (std::size_t i = 0; i < pc.size(); ++i) s += (i ? " " : "") + std::to_string(pc[i]);
          s += "]";
        }
        return s;
      }
    }
    return "";
  };
  if (c.format == "json") {
    std::cout << json(table).dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << "sigma,tau";
    for (std::size_t n = 1; n <= c.max_n; ++n) std::cout << ",n" << n;
    std::cout << ",catalan\n";
    for (const auto& r : table.rows) {
      std::cout << r.sigma << ',' << r.tau;
      for (auto v : r.counts) std::cout << ',' << v;
      std::cout << ',' << (r.catalan ? "true" : "false") << '\n';
      if (r.published == PublishedStatus::mismatch || r.published == PublishedStatus::conflicting) {
        std::cerr << "warning: (" << r.sigma << ',' << r.tau << ") " << note(r) << '\n';
      }
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"sigma", "tau"};
    for (std::size_t n = 1; n <= c.max_n; ++n) head.push_back("n" + std::to_string(n));
    head.push_back("catalan");
    head.push_back("note");
    rows.push_back(head);
    for (const auto& r : table.rows) {
      std::vector<std::string> cells{to_string(r.sigma), to_string(r.tau)};
      for (auto v : r.counts) cells.push_back(std::to_string(v));
      cells.push_back(r.catalan ? "catalan=true" : "");
      cells.push_back(note(r));
      rows.push_back(cells);
    }
    std::cout << aligned(rows);
  }
  return kOk;
}

int cmd_preimages(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  const Word target = parse_permutation(c.perm);
  check_cap(target.size());
  const auto pre = preimages(target, t);
  const std::uint64_t bound = fertility_bound(target.size(), t.min_len());
  if (c.format == "json") {
    std::cout << json{{"patterns", t}, {"target", target}, {"count", pre.size()},
                      {"bound", bound}, {"preimages", pre}}.dump(2)
              << '\n';
  } else {
    std::cout << "preimages " << pre.size() << " (bound " << bound << ")\n";
    for (const Word& p : pre) std::cout << p << '\n';
  }
  return kOk;
}

int cmd_fertility(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  check_cap(c.n);
  const FertilityReport rep = fertility_max(t, c.n, c.parallel);
  if (c.format == "json") {
    std::cout << json(rep).dump(2) << '\n';
  } else {
    std::cout << aligned({{"patterns", t.to_string()},
                          {"n", std::to_string(rep.n)},
                          {"max_count", std::to_string(rep.max_count)},
                          {"bound", std::to_string(rep.bound)},
                          {"witnesses", word_list(rep.witnesses)}});
  }
  return kOk;
}

int cmd_orbit(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  const Word p = parse_permutation(c.perm);
  check_cap(p.size());
  const OrbitReport rep = orbit(p, t);
  if (c.format == "json") {
    std::cout << json(rep).dump(2) << '\n';
  } else {
    std::cout << aligned({{"start", to_string(rep.start)},
                          {"tail", word_list(rep.tail)},
                          {"cycle", word_list(rep.cycle)},
                          {"cycle_length", std::to_string(rep.cycle_length)}});
  }
  return kOk;
}

int cmd_periodic(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  check_cap(c.n);
  const auto cycles = orbit_partition(t, c.n, c.parallel);
  std::size_t points = 0;
  for (const auto& cyc : cycles) points += cyc.size();
  if (c.format == "json") {
    std::cout << json{{"patterns", t}, {"n", c.n}, {"periodic_points", points},
                      {"orbits", cycles}}.dump(2)
              << '\n';
  } else {
    std::cout << "periodic points " << points << ", orbits " << cycles.size() << '\n';
    for (const auto& cyc : cycles) std::cout << cyc.size() << ": " << word_list(cyc) << '\n';
  }
  return kOk;
}

int cmd_image(const RunConfig& c) {
  const PatternSet t = parse_pattern_set(c.patterns);
  check_cap(c.n);
  const std::uint64_t size = image_size(t, c.n, c.parallel);
  if (c.format == "json") {
    std::cout << json{{"patterns", t}, {"n", c.n}, {"image_size", size},
                      {"total", factorial(static_cast<unsigned>(c.n))}}.dump(2)
              << '\n';
  } else {
    std::cout << size << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  check_cap(c.max_n);
  const VerifyOptions opts{c.max_n, c.parallel};
  std::vector<SuiteResult> results;
  bool known = false;
  for (const auto& [name, fn] : verify_suites()) {
    if (c.suite != "all" && c.suite != name) continue;
    known = true;
    results.push_back(fn(opts));
  }
  if (!known) throw parse_error("unknown suite '" + c.suite + "'");
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (c.format == "json") {
    std::cout << json{{"max_n", c.max_n}, {"passed", ok}, {"suites", results}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
      for (const auto& d : r.details) std::cout << "  " << d << '\n';
      if (!r.passed) std::cout << "  first failure: " << r.failure << '\n';
    }
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding stack sorting: simulation, preimages, orbits, and checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_patterns = [&](CLI::App* sub) {
    sub->add_option("--patterns", cfg.patterns, "Forbidden stack patterns, e.g. 123,132")
        ->required();
  };
  auto add_perm = [&](CLI::App* sub, const char* help) {
    sub->add_option("--perm", cfg.perm, help)->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--parallel", cfg.parallel, "Worker threads for exhaustive sweeps")
        ->check(CLI::Range(1u, 256u));
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Permutation length")->required();
  };

  auto* sort_cmd = app.add_subcommand("sort", "Run the machine on one word");
  add_patterns(sort_cmd);
  add_perm(sort_cmd, "Input word, e.g. 52413 or 5,2,4,1,3");
  sort_cmd->add_flag("--trace", cfg.trace, "Print every step as a JSON line");
  add_common(sort_cmd);

  auto* clump_cmd = app.add_subcommand("clump", "Clumping decomposition of a word");
  add_patterns(clump_cmd);
  add_perm(clump_cmd, "Input word");
  add_common(clump_cmd);

  auto* inverse_cmd = app.add_subcommand("inverse", "Invert a bijective machine");
  add_patterns(inverse_cmd);
  add_perm(inverse_cmd, "Image permutation");
  add_common(inverse_cmd);

  auto* table_cmd = app.add_subcommand("table", "Machine sort counts for all pairs in S_3");
  table_cmd->add_option("--max-n", cfg.max_n, "Largest length");
  add_common(table_cmd);

  auto* pre_cmd = app.add_subcommand("preimages", "All preimages of a permutation");
  add_patterns(pre_cmd);
  add_perm(pre_cmd, "Target permutation");
  add_common(pre_cmd);

  auto* fert_cmd = app.add_subcommand("fertility", "Largest preimage count over S_n");
  add_patterns(fert_cmd);
  add_n(fert_cmd);
  add_common(fert_cmd);

  auto* orbit_cmd = app.add_subcommand("orbit", "Trajectory of one permutation");
  add_patterns(orbit_cmd);
  add_perm(orbit_cmd, "Starting permutation");
  add_common(orbit_cmd);

  auto* periodic_cmd = app.add_subcommand("periodic", "Periodic orbits on S_n");
  add_patterns(periodic_cmd);
  add_n(periodic_cmd);
  add_common(periodic_cmd);

  auto* image_cmd = app.add_subcommand("image", "Size of the image of S_n");
  add_patterns(image_cmd);
  add_n(image_cmd);
  add_common(image_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run theorem-verification suites");
  verify_cmd->add_option("--suite", cfg.suite,
                         "all, bijectivity, recursion, bound, sharpness, periodic, "
                         "complement, machine-catalan, conjectures");
  verify_cmd->add_option("--max-n", cfg.max_n, "Largest length");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*sort_cmd) return cmd_sort(cfg);
    if (*clump_cmd) return cmd_clump(cfg);
    if (*inverse_cmd) return cmd_inverse(cfg);
    if (*table_cmd) return cmd_table(cfg);
    if (*pre_cmd) return cmd_preimages(cfg);
    if (*fert_cmd) return cmd_fertility(cfg);
    if (*orbit_cmd) return cmd_orbit(cfg);
    if (*periodic_cmd) return cmd_periodic(cfg);
    if (*image_cmd) return cmd_image(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
  } catch (const pattern_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPatternError;
  } catch (const size_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}
