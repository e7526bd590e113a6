// Command-line surface: exact partition counts, partition enumeration,
// window statistics, the stack-rewriting bijections, and identity
// verification campaigns with machine-readable reports.
//
// Exit codes: 0 success / campaign passed, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stanley/count_table.hpp"
#include "stanley/division_schedule.hpp"
#include "stanley/partition.hpp"
#include "stanley/report.hpp"
#include "stanley/stats.hpp"
#include "stanley/tiling.hpp"
#include "stanley/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
  }
  return value;
}

stanley::Partition parse_partition(const std::string& csv) {
  std::vector<std::int64_t> parts;
  std::size_t begin = 0;
  while (begin < csv.size()) {
    std::size_t end = csv.find(',', begin);
    if (end == std::string::npos) end = csv.size();
    parts.push_back(parse_int(csv.substr(begin, end - begin), "part"));
    begin = end + 1;
  }
  return stanley::Partition(std::move(parts));
}

std::map<std::string, std::int64_t> parse_params(const std::string& csv) {
  std::map<std::string, std::int64_t> params;
  std::size_t begin = 0;
  while (begin < csv.size()) {
    std::size_t end = csv.find(',', begin);
    if (end == std::string::npos) end = csv.size();
    const std::string item = csv.substr(begin, end - begin);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("expected name=value, got '" + item + "'");
    }
    params[item.substr(0, eq)] =
        parse_int(item.substr(eq + 1), "parameter " + item.substr(0, eq));
    begin = end + 1;
  }
  return params;
}

std::int64_t take_param(std::map<std::string, std::int64_t>& params,
                        const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw std::invalid_argument("missing parameter '" + name + "'");
  }
  const std::int64_t value = it->second;
  params.erase(it);
  return value;
}

int run_pfunc(std::int64_t max_n) {
  const stanley::CountTable table = stanley::build_count_table(max_n);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    std::cout << n << ',' << table.at(n).str() << '\n';
  }
  return 0;
}

int run_enumerate(std::int64_t n) {
  for (const stanley::Partition& p : stanley::partitions_of(n)) {
    std::cout << p.to_string() << '\n';
  }
  return 0;
}

int run_stats(std::int64_t n, std::int64_t k) {
  const stanley::CountTable table = stanley::build_count_table(n + k - 1);
  const stanley::DivisionSchedule schedule(n, k);

  ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["a"] = stanley::a_sum(n, k, table).str();
  j["b"] = stanley::distinct_sum_formula(n, table).str();
  ordered_json window = ordered_json::array();
  for (std::int64_t i = 0; i < k; ++i) {
    ordered_json entry;
    entry["m"] = n + i;
    entry["count"] = stanley::occurrences_formula(k, n + i, table).str();
    window.push_back(std::move(entry));
  }
  j["q"] = std::move(window);
  ordered_json sched;
  sched["s"] = schedule.threshold();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < schedule.entries().size(); ++i) {
    ordered_json entry;
    entry["i"] = static_cast<std::int64_t>(i);
    entry["q"] = schedule.entries()[i].quotient;
    entry["r"] = schedule.entries()[i].remainder;
    entries.push_back(std::move(entry));
  }
  sched["entries"] = std::move(entries);
  j["schedule"] = std::move(sched);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_bijection(const std::string& map_name, const std::string& partition_csv,
                  const std::string& params_csv) {
  const stanley::Partition input = parse_partition(partition_csv);
  const stanley::Tiling before = stanley::tiling_from_partition(input);
  auto params = parse_params(params_csv);

  stanley::Tiling after;
  if (map_name == "T" || map_name == "S") {
    const std::int64_t r = take_param(params, "r");
    const std::int64_t k = take_param(params, "k");
    const std::int64_t i = take_param(params, "i");
    after = map_name == "T" ? stanley::map_T(before, r, k, i)
                            : stanley::map_S(before, r, k, i);
  } else if (map_name == "Q" || map_name == "Z") {
    const std::int64_t r = take_param(params, "r");
    const std::int64_t i = take_param(params, "i");
    after = map_name == "Q" ? stanley::map_Q(before, r, i)
                            : stanley::map_Z(before, r, i);
  } else if (map_name == "F" || map_name == "G") {
    const std::int64_t r = take_param(params, "r");
    const std::int64_t k = take_param(params, "k");
    const std::int64_t j = take_param(params, "j");
    after = map_name == "F" ? stanley::map_F(before, r, k, j)
                            : stanley::map_G(before, r, k, j);
  } else {
    throw std::invalid_argument("unknown map '" + map_name +
                                "' (expected T, S, Q, Z, F or G)");
  }
  if (!params.empty()) {
    throw std::invalid_argument("unexpected parameter '" +
                                params.begin()->first + "' for map " +
                                map_name);
  }

  std::cout << "input: " << input.to_string() << '\n';
  std::cout << "output: " << stanley::partition_from_tiling(after).to_string()
            << '\n';
  std::cout << "delta: "
            << after.measure_exponent() - before.measure_exponent() << '\n';
  return 0;
}

std::int64_t default_n_max(stanley::Identity identity) {
  switch (identity) {
    case stanley::Identity::lemma11:
      return 200;
    case stanley::Identity::lemma12:
    case stanley::Identity::proof_chain:
      return 30;
    case stanley::Identity::lemma21:
    case stanley::Identity::lemma22:
    case stanley::Identity::lemma23:
      return 25;
    default:
      return 60;
  }
}

int run_verify(const std::string& identity_name, std::optional<std::int64_t> n_max,
               bool probe_beyond_k, const std::string& oracle,
               const std::string& format, std::int64_t enum_budget,
               std::int64_t set_budget, unsigned parallelism) {
  const auto identity = stanley::identity_from_string(identity_name);
  if (!identity) {
    throw std::invalid_argument("unknown identity '" + identity_name + "'");
  }

  stanley::CampaignConfig cfg;
  cfg.n_max = n_max.value_or(default_n_max(*identity));
  cfg.k_policy = probe_beyond_k ? stanley::KPolicy::probe_beyond
                                : stanley::KPolicy::within_scope;
  if (oracle == "formula-only") {
    cfg.oracle_mode = stanley::OracleMode::formula_only;
  } else if (oracle == "enumerate-only") {
    cfg.oracle_mode = stanley::OracleMode::enumerate_only;
  } else if (oracle == "cross-check") {
    cfg.oracle_mode = stanley::OracleMode::cross_check;
  } else {
    throw std::invalid_argument("unknown oracle mode '" + oracle + "'");
  }
  if (format == "json") {
    cfg.output_format = stanley::ReportFormat::json;
  } else if (format == "csv") {
    cfg.output_format = stanley::ReportFormat::csv;
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  cfg.enum_budget = enum_budget;
  cfg.set_budget = set_budget;
  cfg.parallelism = parallelism;

  const stanley::VerificationReport report =
      stanley::run_campaign(*identity, cfg);
  std::cout << stanley::to_string(report, cfg.output_format);
  return report.passed() ? 0 : 1;
}

int run_bench(std::int64_t max_n) {
  using clock = std::chrono::steady_clock;

  const auto build_start = clock::now();
  const stanley::CountTable table = stanley::build_count_table(max_n);
  const auto build_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            clock::now() - build_start)
                            .count();
  std::cout << "count_table_build: max_n=" << max_n
            << " elapsed_ms=" << build_ms << " p_max_digits="
            << table.at(max_n).str().size() << '\n';

  stanley::CampaignConfig cfg;
  cfg.n_max = max_n;
  const stanley::VerificationReport report = stanley::verify_theorem1(cfg);
  std::cout << "theorem1_campaign: n_max=" << max_n
            << " cells=" << report.cells_checked
            << " elapsed_ms=" << report.elapsed_ms << '\n';
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for partition occurrence identities"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* pfunc = app.add_subcommand(
      "pfunc", "Print n,P(n) for 0 <= n <= max (pentagonal recurrence)");
  std::int64_t pfunc_max = 0;
  pfunc->add_option("--max", pfunc_max, "largest n")->required();
  pfunc->callback([&] { exit_code = run_pfunc(pfunc_max); });

  auto* enumerate = app.add_subcommand(
      "enumerate",
      "Print every partition of n, one per line, reverse-lexicographic");
  std::int64_t enumerate_n = 0;
  enumerate->add_option("--n", enumerate_n, "weight to partition")->required();
  enumerate->callback([&] { exit_code = run_enumerate(enumerate_n); });

  auto* stats = app.add_subcommand(
      "stats", "Window statistics A, B and Q_k(n..n+k-1) plus the division "
               "schedule, as JSON");
  std::int64_t stats_n = 0;
  std::int64_t stats_k = 0;
  stats->add_option("--n", stats_n, "n")->required();
  stats->add_option("--k", stats_k, "part value k (1 <= k <= n)")->required();
  stats->callback([&] { exit_code = run_stats(stats_n, stats_k); });

  auto* bijection = app.add_subcommand(
      "bijection", "Apply one of the stack-rewriting maps to a partition");
  std::string bijection_map;
  std::string bijection_partition;
  std::string bijection_params;
  bijection->add_option("--map", bijection_map, "T, S, Q, Z, F or G")
      ->required();
  bijection
      ->add_option("--partition", bijection_partition,
                   "comma-separated parts, e.g. 3,1,1 (empty for the empty "
                   "partition)")
      ->required();
  bijection
      ->add_option("--params", bijection_params,
                   "map parameters, e.g. r=2,i=3 (T/S take r,k,i; Q/Z take "
                   "r,i; F/G take r,k,j)")
      ->required();
  bijection->callback([&] {
    exit_code = run_bijection(bijection_map, bijection_partition,
                              bijection_params);
  });

  auto* verify = app.add_subcommand(
      "verify", "Run an identity campaign and print its report");
  std::string verify_identity;
  std::optional<std::int64_t> verify_n_max;
  bool verify_probe = false;
  std::string verify_oracle = "cross-check";
  std::string verify_format = "json";
  std::int64_t verify_enum_budget = 30;
  std::int64_t verify_set_budget = 15;
  unsigned verify_parallelism = 0;
  verify
      ->add_option("--identity", verify_identity,
                   "theorem1, lemma11, lemma12, lemma21, lemma22, lemma23, "
                   "proof_chain or stanley_classic")
      ->required();
  verify->add_option("--n-max", verify_n_max,
                     "largest n (default depends on the identity)");
  verify->add_flag("--probe-beyond-k", verify_probe,
                   "theorem1 only: also evaluate k > n, reported but not "
                   "asserted");
  verify->add_option("--oracle", verify_oracle,
                     "formula-only, enumerate-only or cross-check");
  verify->add_option("--format", verify_format, "json or csv");
  verify->add_option("--enum-budget", verify_enum_budget,
                     "largest weight enumeration-backed checks may touch");
  verify->add_option("--set-budget", verify_set_budget,
                     "largest domain weight for set-level transport");
  verify->add_option("--parallel", verify_parallelism,
                     "worker threads (0 = hardware default)");
  verify->callback([&] {
    exit_code = run_verify(verify_identity, verify_n_max, verify_probe,
                           verify_oracle, verify_format, verify_enum_budget,
                           verify_set_budget, verify_parallelism);
  });

  auto* bench = app.add_subcommand(
      "bench", "Time the count-table build and the theorem1 campaign");
  std::int64_t bench_max = 60;
  bench->add_option("--max", bench_max, "table size / campaign n_max");
  bench->callback([&] { exit_code = run_bench(bench_max); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
