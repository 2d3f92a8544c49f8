#include <gtest/gtest.h>

#include "pervpn/suites.hpp"

using namespace pervpn;

namespace {

RunConfig config(int n, std::vector<std::string> suites, int workers = 1) {
  RunConfig c;
  c.n = n;
  c.suites = std::move(suites);
  c.workers = workers;
  return c;
}

}  // namespace

TEST(Report, AllSuitesPassAtN1) {
  auto r = run(config(1, suite_names()));
  EXPECT_TRUE(r.ok());
  for (const auto& s : r.suites) {
    EXPECT_GT(s.rows.size(), 0u) << s.name;
    EXPECT_EQ(s.count(Status::fail), 0) << s.name;
  }
}

TEST(Report, JsonSchema) {
  auto j = to_json(run(config(1, {"census"})));
  EXPECT_EQ(j.at("schema_version"), report_schema_version);
  EXPECT_EQ(j.at("config").at("seed"), 1);
  EXPECT_EQ(j.at("config").at("field"), "rationals");
  EXPECT_FALSE(j.at("advisory").get<bool>());
  EXPECT_TRUE(j.at("ok").get<bool>());
  const auto& s = j.at("suites").at(0);
  EXPECT_EQ(s.at("name"), "census");
  EXPECT_FALSE(s.contains("seconds"));
  for (const auto& row : s.at("rows")) {
    EXPECT_TRUE(row.contains("check"));
    EXPECT_TRUE(row.contains("item"));
    EXPECT_TRUE(row.contains("expected"));
    EXPECT_TRUE(row.contains("computed"));
    EXPECT_EQ(row.at("status"), "pass");
  }
}

TEST(Report, DeterministicAcrossWorkerCounts) {
  auto a = to_json(run(config(2, {"homtables", "serre", "census"}, 1)));
  auto b = to_json(run(config(2, {"homtables", "serre", "census"}, 3)));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Report, FiveClassesAtN1) {
  auto j = to_json(run(config(1, {"census"})));
  bool found = false;
  for (const auto& row : j["suites"][0]["rows"])
    if (row["check"] == "census.class_count") {
      EXPECT_EQ(row["computed"], 5);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Report, PrimeFieldIsAdvisory) {
  auto c = config(1, {"homtables"});
  c.prime = 2;
  auto r = run(c);
  EXPECT_TRUE(r.advisory());
  EXPECT_EQ(to_json(r).at("config").at("field"), "prime 2");
  EXPECT_NE(render(r, "text").find("ADVISORY"), std::string::npos);
  EXPECT_EQ(field_characteristic(), 0u);
}

TEST(Report, Formats) {
  auto r = run(config(1, {"homtables", "plumbing"}));
  auto tsv = render(r, "tsv");
  EXPECT_NE(tsv.find("# homtables\thom.simple_simple\nr\tIC0->IC0"), std::string::npos);
  EXPECT_NE(tsv.find("linalg.rank_nullity"), std::string::npos);
  EXPECT_NE(render(r, "text").find("OK"), std::string::npos);
  EXPECT_THROW(render(r, "xml"), std::invalid_argument);
}

TEST(Report, UnknownSuiteIsAFailedRow) {
  auto r = run(config(1, {"nonsense"}));
  EXPECT_FALSE(r.ok());
}

TEST(Report, InconclusiveHandling) {
  Report r;
  r.config = config(1, {});
  SuiteResult s;
  s.name = "x";
  CheckRow row;
  row.status = Status::inconclusive;
  s.rows.push_back(row);
  r.suites.push_back(s);
  EXPECT_FALSE(r.ok());
  r.config.allow_inconclusive = true;
  EXPECT_TRUE(r.ok());
}
