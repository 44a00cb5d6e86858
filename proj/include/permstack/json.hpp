#pragma once

#include <json.hpp>

#include "permstack/clumping.hpp"
#include "permstack/dynamics/bijectivity.hpp"
#include "permstack/dynamics/machine.hpp"
#include "permstack/dynamics/orbits.hpp"
#include "permstack/dynamics/preimages.hpp"
#include "permstack/dynamics/verify.hpp"
#include "permstack/stack_sort.hpp"

// nlohmann::json conversions. Words serialize as arrays of letters.

namespace permstack {

inline void to_json(nlohmann::json& j, const Word& w) { j = w.vector(); }

inline void from_json(const nlohmann::json& j, Word& w) {
  w = Word(j.get<std::vector<Letter>>());
}

inline void to_json(nlohmann::json& j, const PatternSet& t) {
  j = nlohmann::json::array();
  for (const Word& p : t) j.push_back(p);
}

inline nlohmann::json trace_event_json(const TraceEvent& e) {
  return {{"step", std::string(1, static_cast<char>(e.step))},
          {"letter", e.letter},
          {"stack", e.stack},
          {"output", e.output}};
}

inline void to_json(nlohmann::json& j, const Clumping& c) {
  j = {{"segments", c.segments},
       {"witness_pattern", c.witness_pattern},
       {"witness_indices", c.witness_indices}};
}

inline void to_json(nlohmann::json& j, const FertilityReport& r) {
  j = {{"patterns", r.patterns},
       {"n", r.n},
       {"max_count", r.max_count},
       {"bound", r.bound},
       {"witnesses", r.witnesses}};
}

inline void to_json(nlohmann::json& j, const OrbitReport& r) {
  j = {{"start", r.start}, {"tail", r.tail}, {"cycle", r.cycle}, {"cycle_length", r.cycle_length}};
}

inline void to_json(nlohmann::json& j, const SortTableRow& r) {
  j = {{"sigma", r.sigma},
       {"tau", r.tau},
       {"counts", r.counts},
       {"catalan", r.catalan},
       {"published", to_string(r.published)},
       {"published_counts", r.published_counts}};
}

inline void to_json(nlohmann::json& j, const SortTable& t) {
  j = {{"max_n", t.max_n}, {"rows", t.rows}};
}

inline void to_json(nlohmann::json& j, const SuiteResult& s) {
  j = {{"suite", s.name}, {"passed", s.passed}, {"details", s.details}};
  if (!s.passed) j["failure"] = s.failure;
}

}  // namespace permstack
