#include <gtest/gtest.h>

#include "permstack/json.hpp"
#include "permstack/permstack.hpp"

using namespace permstack;
using nlohmann::json;

namespace {

Word W(std::string_view s) { return parse_word(s); }
PatternSet T(std::string_view s) { return parse_pattern_set(s); }

}  // namespace

TEST(Json, WordRoundTrip) {
  for (const Word& w : {W("52413"), Word{}, W("10,2,1")}) {
    const json j = w;
    EXPECT_TRUE(j.is_array());
    EXPECT_EQ(j.get<Word>(), w);
    EXPECT_EQ(json::parse(j.dump()).get<Word>(), w);
  }
  EXPECT_THROW(json::parse("[1,0]").get<Word>(), std::invalid_argument);
}

TEST(Json, PatternSetAndTrace) {
  const json t = T("132,123");
  EXPECT_EQ(t.dump(), R"([[1,2,3],[1,3,2]])");
  const SortRun run = sort_with_trace(W("132"), T("21"));
  const json e = trace_event_json(run.trace.at(1));
  EXPECT_EQ(e["step"], "X");
  EXPECT_EQ(e["letter"], 1);
  EXPECT_EQ(e["output"], json::array({1}));
}

TEST(Json, Reports) {
  const auto c = t_clumping(W("731426"), T("123,132"));
  const json jc = *c;
  EXPECT_EQ(jc["segments"].size(), 4u);
  EXPECT_EQ(jc["segments"][3].get<Word>(), W("1426"));

  const json jo = orbit(W("213"), T("123,132"));
  EXPECT_EQ(jo["cycle_length"], 2);
  EXPECT_EQ(jo["cycle"].size(), 2u);

  const json jf = fertility_max(T("21"), 4);
  EXPECT_EQ(jf["max_count"], 14);
  EXPECT_EQ(jf["bound"], 14);

  const json jt = build_sort_table(4);
  EXPECT_EQ(jt["rows"].size(), 15u);

  SuiteResult s("demo");
  s.fail("broken");
  const json js = s;
  EXPECT_EQ(js["passed"], false);
  EXPECT_EQ(js["failure"], "broken");
}
