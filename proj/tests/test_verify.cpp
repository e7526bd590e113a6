#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "stanley/count_table.hpp"
#include "stanley/report.hpp"
#include "stanley/verify.hpp"

using stanley::BigCount;
using stanley::CampaignConfig;
using stanley::CountTable;
using stanley::Identity;
using stanley::KPolicy;
using stanley::OracleMode;
using stanley::run_campaign;
using stanley::VerificationReport;

namespace {

CampaignConfig config(std::int64_t n_max, OracleMode mode = OracleMode::cross_check) {
  CampaignConfig cfg;
  cfg.n_max = n_max;
  cfg.oracle_mode = mode;
  return cfg;
}

// Reports must agree except for timing.
bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
  VerificationReport x = a;
  VerificationReport y = b;
  x.elapsed_ms = 0;
  y.elapsed_ms = 0;
  return to_json(x) == to_json(y);
}

}  // namespace

TEST_CASE("theorem1 formula cells count the k <= n triangle") {
  const auto report =
      stanley::verify_theorem1(config(10, OracleMode::formula_only));
  CHECK(report.cells_checked == 55);
  CHECK(report.failures.empty());
  CHECK(report.passed());
  CHECK(report.probe_cells_checked == 0);
}

TEST_CASE("theorem1 smallest range has a single cell") {
  const auto report =
      stanley::verify_theorem1(config(1, OracleMode::formula_only));
  CHECK(report.cells_checked == 1);
  CHECK(report.passed());
}

TEST_CASE("theorem1 cross-check adds one enumerated cell per n in budget") {
  auto cfg = config(12);
  cfg.enum_budget = 8;
  const auto report = stanley::verify_theorem1(cfg);
  CHECK(report.cells_checked == 78 + 8);
  CHECK(report.passed());
}

TEST_CASE("theorem1 enumerate-only works within the budget") {
  auto cfg = config(10, OracleMode::enumerate_only);
  const auto report = stanley::verify_theorem1(cfg);
  CHECK(report.cells_checked == 55);
  CHECK(report.passed());
}

TEST_CASE("theorem1 probe evaluates k beyond n without asserting") {
  auto cfg = config(10, OracleMode::formula_only);
  cfg.k_policy = KPolicy::probe_beyond;
  const auto report = stanley::verify_theorem1(cfg);
  CHECK(report.cells_checked == 55);
  CHECK(report.probe_cells_checked == 45);  // sum of (10 - n)
  CHECK(report.probe_mismatches.empty());   // the identity happens to extend
  CHECK(report.passed());
}

TEST_CASE("a corrupted table is caught by the enumeration cross-check") {
  // Formula-vs-formula comparisons reduce to the same multiset of lookups,
  // so corruption is only visible once enumeration enters.
  std::vector<BigCount> values;
  const CountTable good = stanley::build_count_table(19);
  for (std::int64_t n = 0; n <= 19; ++n) values.push_back(good.at(n));
  values[5] = BigCount(6);  // P(5) is 7
  const CountTable corrupt = CountTable::from_values(values);

  const auto formula_report = stanley::verify_theorem1(
      config(10, OracleMode::formula_only), corrupt);
  CHECK(formula_report.passed());  // blind spot, by construction

  const auto cross_report =
      stanley::verify_theorem1(config(10, OracleMode::cross_check), corrupt);
  CHECK_FALSE(cross_report.passed());
  CHECK_FALSE(cross_report.failures.empty());

  const auto lemma12_report = stanley::verify_occurrence_formula(
      config(10, OracleMode::cross_check), corrupt);
  CHECK_FALSE(lemma12_report.passed());
  // The wrong P(5) first shows up in Q_k(m) sums with m - j*k = 5.
  bool found = false;
  for (const auto& failure : lemma12_report.failures) {
    if (failure.lhs != failure.rhs) found = true;
  }
  CHECK(found);
}

TEST_CASE("schedule campaign covers the full triangle") {
  const auto report = stanley::verify_lemma_schedule(config(60));
  CHECK(report.cells_checked == 60 * 61 / 2);
  CHECK(report.passed());
}

TEST_CASE("occurrence formula campaign counts (k, m) pairs") {
  const auto report = stanley::verify_occurrence_formula(config(12));
  CHECK(report.cells_checked == 78);
  CHECK(report.passed());
}

TEST_CASE("tiling lemma campaigns pass at unit scale") {
  for (const Identity id :
       {Identity::lemma21, Identity::lemma22, Identity::lemma23}) {
    auto cfg = config(10);
    cfg.set_budget = 8;
    const auto report = stanley::verify_tiling_lemmas(id, cfg);
    CAPTURE(to_string(id));
    CHECK(report.passed());
    CHECK(report.cells_checked > 0);
  }
}

TEST_CASE("set-level transport holds up to domain weight 20") {
  for (const Identity id :
       {Identity::lemma21, Identity::lemma22, Identity::lemma23}) {
    auto cfg = config(20);
    cfg.set_budget = 20;
    const auto report = stanley::verify_tiling_lemmas(id, cfg);
    CAPTURE(to_string(id));
    CHECK(report.passed());
  }
}

TEST_CASE("set budget zero disables transport but keeps count checks") {
  auto cfg = config(10);
  cfg.set_budget = 0;
  const auto with = stanley::verify_tiling_lemmas(Identity::lemma22, config(10));
  const auto without = stanley::verify_tiling_lemmas(Identity::lemma22, cfg);
  CHECK(without.passed());
  CHECK(without.cells_checked < with.cells_checked);
}

TEST_CASE("proof chain campaign passes at unit scale") {
  const auto report = stanley::verify_proof_chain(config(12));
  CHECK(report.passed());
  // Five fixed identity parts per (n, k) plus one per regrouped block.
  CHECK(report.cells_checked >= 5 * 78);
}

TEST_CASE("stanley classic campaign passes") {
  const auto report = stanley::verify_stanley_classic(config(20));
  CHECK(report.passed());
  CHECK(report.cells_checked >= 20);
}

TEST_CASE("campaigns are deterministic and parallelism-invariant") {
  for (const Identity id :
       {Identity::theorem1, Identity::lemma12, Identity::lemma22,
        Identity::proof_chain}) {
    CAPTURE(to_string(id));
    auto serial = config(10);
    serial.parallelism = 1;
    auto parallel = config(10);
    parallel.parallelism = 4;
    const auto first = run_campaign(id, serial);
    const auto second = run_campaign(id, serial);
    const auto fanned = run_campaign(id, parallel);
    CHECK(same_outcome(first, second));
    CHECK(same_outcome(first, fanned));
  }
}

TEST_CASE("invalid configs are usage errors") {
  CHECK_THROWS_AS(stanley::verify_theorem1(config(0)), std::invalid_argument);
  CHECK_THROWS_AS(
      stanley::verify_occurrence_formula(config(40)),  // budget is 30
      std::invalid_argument);
  CHECK_THROWS_AS(
      stanley::verify_occurrence_formula(config(10, OracleMode::formula_only)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      stanley::verify_proof_chain(config(10, OracleMode::formula_only)),
      std::invalid_argument);
  CHECK_THROWS_AS(stanley::verify_tiling_lemmas(Identity::lemma21,
                                                config(31)),  // budget 30
                  std::invalid_argument);
  CHECK_THROWS_AS(stanley::verify_tiling_lemmas(Identity::theorem1, config(5)),
                  std::invalid_argument);
  // enumerate-only theorem1 reaches weight 2*n_max - 1.
  CHECK_THROWS_AS(stanley::verify_theorem1(config(20, OracleMode::enumerate_only)),
                  std::invalid_argument);
  CHECK_THROWS_AS(stanley::verify_lemma_schedule(config(200000)),
                  std::invalid_argument);
  auto huge_budget = config(10);
  huge_budget.enum_budget = 200000;
  CHECK_THROWS_AS(stanley::verify_theorem1(huge_budget), std::invalid_argument);
}

TEST_CASE("a vacuous range is rejected rather than reported as a pass") {
  // lemma23's only n = 1 cell has r_0 = 0, and set checks are off: nothing
  // would ever be compared.
  auto cfg = config(1);
  cfg.set_budget = 0;
  CHECK_THROWS_AS(stanley::verify_tiling_lemmas(Identity::lemma23, cfg),
                  std::invalid_argument);
}

TEST_CASE("run_campaign dispatches every identity") {
  for (const Identity id :
       {Identity::theorem1, Identity::lemma11, Identity::lemma12,
        Identity::lemma21, Identity::lemma22, Identity::lemma23,
        Identity::proof_chain, Identity::stanley_classic}) {
    CAPTURE(to_string(id));
    const auto report = run_campaign(id, config(6));
    CHECK(report.identity == id);
    CHECK(report.passed());
    CHECK(report.cells_checked > 0);
  }
}
