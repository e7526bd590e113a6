#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "stanley/big_count.hpp"
#include "stanley/report.hpp"

using stanley::BigCount;
using stanley::Identity;
using stanley::identity_from_string;
using stanley::ParamList;
using stanley::ReportFormat;
using stanley::VerificationReport;

namespace {

VerificationReport sample_report() {
  VerificationReport report;
  report.identity = Identity::lemma12;
  report.range = ParamList{{"n_max", std::int64_t{30}},
                           {"oracle", std::string("cross-check")}};
  report.cells_checked = 465;
  report.failures.push_back(
      {ParamList{{"k", std::int64_t{2}},
                 {"m", std::int64_t{6}},
                 {"check", std::string("count")}},
       BigCount(8), BigCount("123456789012345678901234567890")});
  report.elapsed_ms = 17;
  return report;
}

}  // namespace

TEST_CASE("identity names round trip") {
  const char* names[] = {"theorem1", "lemma11",     "lemma12",
                         "lemma21",  "lemma22",     "lemma23",
                         "proof_chain", "stanley_classic"};
  for (const char* name : names) {
    const auto id = identity_from_string(name);
    REQUIRE(id.has_value());
    CHECK(to_string(*id) == name);
  }
  CHECK_FALSE(identity_from_string("lemma99").has_value());
  CHECK_FALSE(identity_from_string("").has_value());
}

TEST_CASE("json rendering keeps the schema key order and string counts") {
  const std::string expected = R"({
  "identity": "lemma12",
  "range": {
    "n_max": 30,
    "oracle": "cross-check"
  },
  "cells_checked": 465,
  "failures": [
    {
      "params": {
        "k": 2,
        "m": 6,
        "check": "count"
      },
      "lhs": "8",
      "rhs": "123456789012345678901234567890"
    }
  ],
  "elapsed_ms": 17
}
)";
  CHECK(to_json(sample_report()) == expected);
}

TEST_CASE("probe results serialize as a trailing member") {
  VerificationReport report = sample_report();
  report.failures.clear();
  report.probe_cells_checked = 3;
  report.probe_mismatches.push_back(
      {ParamList{{"n", std::int64_t{4}}, {"k", std::int64_t{9}}}, BigCount(7),
       BigCount(8)});
  const std::string json = to_json(report);
  CHECK(json.find("\"probe\": {") != std::string::npos);
  CHECK(json.find("\"mismatches\"") != std::string::npos);
  // Probe data never counts as failure.
  CHECK(report.passed());
}

TEST_CASE("csv rendering lists failures only") {
  const std::string expected =
      "params,lhs,rhs\n"
      "k=2;m=6;check=count,8,123456789012345678901234567890\n";
  CHECK(to_csv(sample_report()) == expected);

  VerificationReport clean = sample_report();
  clean.failures.clear();
  CHECK(to_csv(clean) == "params,lhs,rhs\n");
  CHECK(to_string(clean, ReportFormat::csv) == "params,lhs,rhs\n");
  CHECK(to_string(clean, ReportFormat::json) == to_json(clean));
}
