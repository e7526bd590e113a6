#include "stanley/stats.hpp"

#include <stdexcept>
#include <string>

#include "stanley/partition.hpp"

namespace stanley {

namespace {

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " +
                                std::to_string(value));
  }
}

void require_nonnegative(std::int64_t value, const char* name) {
  if (value < 0) {
    throw std::invalid_argument(std::string(name) + " must be >= 0, got " +
                                std::to_string(value));
  }
}

void require_coverage(const CountTable& table, std::int64_t index) {
  if (index > table.max_n()) {
    throw std::out_of_range("count table covers only [0, " +
                            std::to_string(table.max_n()) + "], need " +
                            std::to_string(index));
  }
}

}  // namespace

BigCount occurrences_formula(std::int64_t k, std::int64_t m,
                             const CountTable& table) {
  require_positive(k, "k");
  require_nonnegative(m, "m");
  require_coverage(table, m);
  BigCount total;
  for (std::int64_t j = 1; j * k <= m; ++j) {
    total += table.at(m - j * k);
  }
  return total;
}

BigCount occurrences_enumerated(std::int64_t k, std::int64_t m) {
  require_positive(k, "k");
  require_nonnegative(m, "m");
  BigCount total;
  for (const Partition& p : partitions_of(m)) {
    total += BigCount(count_occurrences(p, k));
  }
  return total;
}

BigCount distinct_sum_formula(std::int64_t n, const CountTable& table) {
  require_positive(n, "n");
  require_coverage(table, n - 1);
  BigCount total(1);  // the single all-of-n part, i = n
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    total += table.at(i);
  }
  return total;
}

BigCount distinct_sum_enumerated(std::int64_t n) {
  require_positive(n, "n");
  BigCount total;
  for (const Partition& p : partitions_of(n)) {
    total += BigCount(count_distinct(p));
  }
  return total;
}

BigCount a_sum(std::int64_t n, std::int64_t k, const CountTable& table) {
  require_positive(n, "n");
  if (k < 1 || k > n) {
    throw std::invalid_argument("a_sum: requires 1 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  require_coverage(table, n + k - 1);
  BigCount total;
  for (std::int64_t i = 0; i < k; ++i) {
    total += occurrences_formula(k, n + i, table);
  }
  return total;
}

BigCount v_count(std::int64_t p, std::int64_t q, std::int64_t m,
                 const CountTable& table) {
  require_positive(p, "p");
  require_positive(q, "q");
  require_nonnegative(m, "m");
  if (p * q > m) {
    return BigCount();
  }
  require_coverage(table, m - p * q);
  return table.at(m - p * q);
}

BigCount v_count_enumerated(std::int64_t p, std::int64_t q, std::int64_t m) {
  require_positive(p, "p");
  require_positive(q, "q");
  require_nonnegative(m, "m");
  BigCount total;
  for (const Partition& part : partitions_of(m)) {
    if (count_occurrences(part, q) >= p) {
      total += BigCount(1);
    }
  }
  return total;
}

}  // namespace stanley
