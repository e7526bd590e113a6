#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "stanley/big_count.hpp"

namespace stanley {

/// The identities the verifier knows how to campaign over.
enum class Identity {
  theorem1,
  lemma11,
  lemma12,
  lemma21,
  lemma22,
  lemma23,
  proof_chain,
  stanley_classic,
};

std::string_view to_string(Identity id);
std::optional<Identity> identity_from_string(std::string_view name);

enum class KPolicy { within_scope, probe_beyond };
enum class OracleMode { formula_only, enumerate_only, cross_check };
enum class ReportFormat { json, csv };

std::string_view to_string(KPolicy policy);
std::string_view to_string(OracleMode mode);

struct CampaignConfig {
  std::int64_t n_max = 60;
  KPolicy k_policy = KPolicy::within_scope;
  OracleMode oracle_mode = OracleMode::cross_check;
  ReportFormat output_format = ReportFormat::json;
  /// Worker threads for independent cells; 0 picks the hardware default.
  /// Serial and parallel runs produce identical reports (minus elapsed_ms).
  unsigned parallelism = 0;
  /// Largest weight any enumeration-backed check may touch.
  std::int64_t enum_budget = 30;
  /// Largest domain weight for set-level bijection transport.
  std::int64_t set_budget = 15;
};

/// Ordered key/value list; values are either integers or short tags.
/// Rendered as a JSON object, so keys must be unique.
using ParamValue = std::variant<std::int64_t, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

struct Failure {
  ParamList params;
  BigCount lhs;
  BigCount rhs;
};

struct VerificationReport {
  Identity identity = Identity::theorem1;
  ParamList range;
  std::int64_t cells_checked = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;

  // Probe results (k beyond the identity's stated scope) are informational:
  // they never fail a campaign and are serialized separately.
  std::int64_t probe_cells_checked = 0;
  std::vector<Failure> probe_mismatches;

  bool passed() const { return failures.empty(); }
};

/// Stable-key-order JSON rendering, counts as decimal strings:
/// {"identity", "range", "cells_checked", "failures", "elapsed_ms"} plus a
/// trailing "probe" member when the campaign ran with probe-beyond-k.
std::string to_json(const VerificationReport& report);

/// CSV rendering: header "params,lhs,rhs", one row per failure.
std::string to_csv(const VerificationReport& report);

std::string to_string(const VerificationReport& report, ReportFormat format);

}  // namespace stanley
