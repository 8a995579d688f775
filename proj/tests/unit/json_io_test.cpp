#include <gtest/gtest.h>

#include <json.hpp>

#include "discplane/errors.hpp"
#include "discplane/json_io.hpp"
#include "test_support.hpp"

using namespace discplane;
using testsupport::S;
using testsupport::V;

TEST(Json, ScalarRoundTrip) {
  auto b = testsupport::alpha_bindings();
  for (const char* t : {"0", "-7/3", "sqrt(13)-3", "1+a+a^2", "sqrt(13)+sqrt(17)", "2*pi-98*root(10,3)+208"}) {
    Scalar x = S(t, b);
    std::string j = to_json(x);
    EXPECT_EQ(compare(scalar_from_json(j), x), Cmp::Equal) << t;
    auto doc = nlohmann::json::parse(j);
    EXPECT_TRUE(doc.contains("decimal"));
    EXPECT_TRUE(doc.contains("kind"));
  }
  auto doc = nlohmann::json::parse(to_json(S("sqrt(2)")));
  EXPECT_EQ(doc["kind"], "algebraic");
  EXPECT_EQ(doc["minpoly"], nlohmann::json::array({"-2", "0", "1"}));
  EXPECT_EQ(doc["decimal"].get<std::string>().substr(0, 12), "1.4142135623");
  EXPECT_EQ(nlohmann::json::parse(to_json(S("pi")))["kind"], "interval_real");
}

TEST(Json, ExpansionRoundTrip) {
  for (const char* s : {"1,sqrt(13),sqrt(17)", "1,2,4", "0,0,1"}) {
    Expansion e = expand(V(s));
    std::string j = to_json(e);
    Expansion back = expansion_from_json(j);
    EXPECT_EQ(back.digits, e.digits);
    ASSERT_EQ(back.iterates.size(), e.iterates.size());
    for (std::size_t n = 0; n < e.iterates.size(); ++n) EXPECT_EQ(back.iterates[n], e.iterates[n]);
    EXPECT_EQ(back.status.kind, e.status.kind);
    // Isolating intervals may be refined in between, so compare decimals only.
    auto a = nlohmann::json::parse(j), b = nlohmann::json::parse(to_json(back));
    for (std::size_t n = 0; n < e.iterates.size(); ++n)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(b["iterates"][n][k]["decimal"], a["iterates"][n][k]["decimal"]);
    a.erase("iterates");
    b.erase("iterates");
    EXPECT_EQ(b, a);
  }
}

TEST(Json, PatternsAndPoints) {
  Pattern p = generate_pn(std::vector<int>{3, 1, 3});
  EXPECT_EQ(pattern_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(Pattern{UnitFace{{1, 0, -1}, 2}}), R"([{"type":2,"x":[1,0,-1]}])");
  PointSet q({{0, 0, 0}, {1, -2, 3}});
  EXPECT_EQ(to_json(q), "[[0,0,0],[1,-2,3]]");
  EXPECT_EQ(pointset_from_json(to_json(q)), q);
  auto t = nlohmann::json::parse(to_json(generate_tn(std::vector<int>{3, 3})));
  EXPECT_EQ(t["levels"].size(), 3u);
  EXPECT_EQ(t["translations"][0], nlohmann::json::array({1, 0, 0}));
}

TEST(Json, Reports) {
  auto a = nlohmann::json::parse(to_json(check_annulus_base({1})));
  EXPECT_EQ(a["passed"], false);
  EXPECT_EQ(a["condition4"], false);
  EXPECT_FALSE(a["witnesses"].empty());
  auto v = nlohmann::json::parse(to_json(decide_critical_connectedness(V("1,2,4"))));
  EXPECT_EQ(v["verdict"], "NotConnected");
  EXPECT_EQ(v["reason"], "ZeroFirstCoordDim1");
  EXPECT_EQ(v["step"], 2);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(scalar_from_json("{"), ParseError);
  EXPECT_THROW(scalar_from_json("{\"kind\":\"rational\"}"), ParseError);
  EXPECT_THROW(pattern_from_json("[{\"x\":[0,0,0],\"type\":4}]"), ParseError);
  EXPECT_THROW(pointset_from_json("[[0,0]]"), ParseError);
  EXPECT_THROW(expansion_from_json("{\"digits\":[1],\"iterates\":[],\"status\":{\"kind\":\"halted\",\"step\":0}}"),
               ParseError);
}
