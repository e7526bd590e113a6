#include "stanley/report.hpp"

#include <json.hpp>

namespace stanley {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::pair<Identity, std::string_view> kIdentityNames[] = {
    {Identity::theorem1, "theorem1"},
    {Identity::lemma11, "lemma11"},
    {Identity::lemma12, "lemma12"},
    {Identity::lemma21, "lemma21"},
    {Identity::lemma22, "lemma22"},
    {Identity::lemma23, "lemma23"},
    {Identity::proof_chain, "proof_chain"},
    {Identity::stanley_classic, "stanley_classic"},
};

ordered_json params_to_json(const ParamList& params) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : params) {
    if (std::holds_alternative<std::int64_t>(value)) {
      obj[key] = std::get<std::int64_t>(value);
    } else {
      obj[key] = std::get<std::string>(value);
    }
  }
  return obj;
}

ordered_json failures_to_json(const std::vector<Failure>& failures) {
  ordered_json arr = ordered_json::array();
  for (const Failure& f : failures) {
    ordered_json row = ordered_json::object();
    row["params"] = params_to_json(f.params);
    row["lhs"] = f.lhs.str();
    row["rhs"] = f.rhs.str();
    arr.push_back(std::move(row));
  }
  return arr;
}

std::string params_to_csv_field(const ParamList& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    if (std::holds_alternative<std::int64_t>(value)) {
      out += std::to_string(std::get<std::int64_t>(value));
    } else {
      out += std::get<std::string>(value);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Identity id) {
  for (const auto& [value, name] : kIdentityNames) {
    if (value == id) return name;
  }
  return "unknown";
}

std::optional<Identity> identity_from_string(std::string_view name) {
  for (const auto& [value, candidate] : kIdentityNames) {
    if (candidate == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(KPolicy policy) {
  return policy == KPolicy::within_scope ? "within-scope" : "probe-beyond";
}

std::string_view to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::formula_only:
      return "formula-only";
    case OracleMode::enumerate_only:
      return "enumerate-only";
    case OracleMode::cross_check:
      return "cross-check";
  }
  return "unknown";
}

std::string to_json(const VerificationReport& report) {
  ordered_json j = ordered_json::object();
  j["identity"] = std::string(to_string(report.identity));
  j["range"] = params_to_json(report.range);
  j["cells_checked"] = report.cells_checked;
  j["failures"] = failures_to_json(report.failures);
  j["elapsed_ms"] = report.elapsed_ms;
  if (report.probe_cells_checked > 0) {
    ordered_json probe = ordered_json::object();
    probe["cells_checked"] = report.probe_cells_checked;
    probe["mismatches"] = failures_to_json(report.probe_mismatches);
    j["probe"] = std::move(probe);
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "params,lhs,rhs\n";
  for (const Failure& f : report.failures) {
    out += params_to_csv_field(f.params);
    out += ',';
    out += f.lhs.str();
    out += ',';
    out += f.rhs.str();
    out += '\n';
  }
  return out;
}

std::string to_string(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::json ? to_json(report) : to_csv(report);
}

}  // namespace stanley
