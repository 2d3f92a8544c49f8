#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pervpn/objects.hpp"

namespace pervpn {

enum class Status { pass, fail, inconclusive };
const char* to_string(Status s);

struct CheckRow {
  std::string check;  // e.g. "hom.simple_simple"
  std::string item;   // e.g. "IC1->IC2"
  Status status = Status::pass;
  nlohmann::json expected;
  nlohmann::json computed;
  std::string detail;
  std::uint64_t seed = 0;  // set when the row used randomness
};

struct SuiteResult {
  std::string name;
  int n = 0;
  std::vector<CheckRow> rows;
  double seconds = 0;

  int count(Status s) const;
};

struct RunConfig {
  int n = 2;
  std::uint64_t prime = 0;  // 0 means rationals
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  bool allow_inconclusive = false;
  bool timings = false;
  int workers = 1;
};

const std::vector<std::string>& suite_names();

// Each suite returns one row per checked statement instance.
SuiteResult suite_homtables(const Session& s, int workers);
SuiteResult suite_extalgebra(const Session& s, int workers);
SuiteResult suite_strings(const Session& s, int workers);
SuiteResult suite_cy(const Session& s, int workers, std::uint64_t seed);
SuiteResult suite_serre(const Session& s, int workers, std::uint64_t seed);
SuiteResult suite_census(const Session& s, int workers, std::uint64_t seed);
SuiteResult suite_structural(const Session& s, int workers, std::uint64_t seed);
SuiteResult suite_plumbing(std::uint64_t seed, int count = 1000, int max_dim = 20);

SuiteResult run_suite(const std::string& name, const Session& s, const RunConfig& cfg);

struct Report {
  RunConfig config;
  std::vector<SuiteResult> suites;

  bool advisory() const { return config.prime != 0; }
  bool ok() const;
};

Report run(const RunConfig& cfg);

constexpr int report_schema_version = 1;
nlohmann::json to_json(const Report& r);
std::string render(const Report& r, const std::string& format);

// PERVPN_WORKERS, falling back to 1.
int default_workers();

}  // namespace pervpn
