#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "flagprim/io.hpp"
#include "flagprim/report.hpp"

using namespace flagprim;

TEST(Io, ParseWeights) {
  EXPECT_EQ(parse_weight("1,0,2"), (Weight{1, 0, 2}));
  EXPECT_EQ(parse_weight(" 3 , 4 "), (Weight{3, 4}));
  EXPECT_EQ(parse_weights("1,0;0,1"), (std::vector<Weight>{{1, 0}, {0, 1}}));
  EXPECT_THROW(parse_weight(""), ParseError);
  EXPECT_THROW(parse_weight("1,,2"), ParseError);
  EXPECT_THROW(parse_weight("1,a"), ParseError);
  EXPECT_THROW(parse_weight("1.5"), ParseError);
  EXPECT_THROW(parse_weight("99999999999"), ParseError);
  EXPECT_THROW(parse_weights("1,0;1"), ParseError);
  EXPECT_THROW(parse_weights("1,0;"), ParseError);
}

TEST(Io, ParseSupports) {
  EXPECT_EQ(parse_supports("3,1|2"), (std::vector<Support>{{1, 3}, {2}}));
  EXPECT_THROW(parse_supports("1||2"), ParseError);
  EXPECT_THROW(parse_supports("1,1"), ParseError);
  EXPECT_THROW(parse_supports("0"), ParseError);
}

TEST(Io, FormatRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-50, 50), len(1, 8);
  for (int t = 0; t < 200; ++t) {
    Weight w(len(rng));
    for (auto& x : w) x = coord(rng);
    EXPECT_EQ(parse_weight(format_weight(w)), w);
  }
}

TEST(Io, ConfigEnvAndValidation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  setenv("FLAGPRIM_SEED", "7", 1);
  setenv("FLAGPRIM_SAMPLES", "5", 1);
  c.apply_env();
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.sample_count, 5);
  setenv("FLAGPRIM_BUDGET_MS", "soon", 1);
  EXPECT_THROW(c.apply_env(), ParseError);
  unsetenv("FLAGPRIM_SEED");
  unsetenv("FLAGPRIM_SAMPLES");
  unsetenv("FLAGPRIM_BUDGET_MS");
  c.workers = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Io, ResultCache) {
  auto dir = std::filesystem::temp_directory_path() / "flagprim-io-test";
  std::filesystem::remove_all(dir);
  ResultCache off("");
  EXPECT_FALSE(off.enabled());
  off.put({{"a", 1}}, {{"b", 2}});
  EXPECT_FALSE(off.get({{"a", 1}}));

  ResultCache cache(dir.string());
  nlohmann::json req{{"command", "prim check"}, {"args", {{"--type", {"A2"}}}}};
  EXPECT_FALSE(cache.get(req));
  cache.put(req, {{"status", "yes"}});
  auto hit = cache.get(req);
  ASSERT_TRUE(hit);
  EXPECT_EQ((*hit)["status"], "yes");
  nlohmann::json other = req;
  other["args"]["--type"] = {"A3"};
  EXPECT_FALSE(cache.get(other));
  std::filesystem::remove_all(dir);
}

TEST(Io, ContentHashStable) {
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
  EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(content_hash("abc").size(), 16u);
}

TEST(Io, VerdictJson) {
  Verdict v;
  v.status = Status::No;
  v.certificate.kind = CertKind::Witness;
  v.certificate.witness = {1, 2};
  v.certificate.value = 3;
  v.extra.push_back({CertKind::Bound, "weyl"});
  auto j = to_json(v);
  EXPECT_EQ(j["status"], "no");
  EXPECT_EQ(j["certificate"]["witness"], (std::vector<int>{1, 2}));
  EXPECT_EQ(j["certificate"]["value"], 3);
  EXPECT_EQ(j["supporting"][0]["rule"], "weyl");
}

TEST(Io, TableReportShape) {
  auto t1 = verify_table(1);
  EXPECT_EQ(t1["table"], 1);
  EXPECT_TRUE(t1["all_match"].get<bool>());
  EXPECT_EQ(t1["entries"].size(), t1["total"].get<size_t>());
  EXPECT_THROW(verify_table(5), std::invalid_argument);
}
