#include "stanley/count_table.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace stanley {

CountTable CountTable::from_values(std::vector<BigCount> values) {
  if (values.empty()) {
    throw std::invalid_argument("CountTable: empty value list");
  }
  if (values.front() != BigCount(1)) {
    throw std::invalid_argument("CountTable: values[0] must be 1");
  }
  return CountTable(std::move(values));
}

const BigCount& CountTable::at(std::int64_t n) const {
  if (n < 0 || n > max_n()) {
    throw std::out_of_range("CountTable: index " + std::to_string(n) +
                            " outside [0, " + std::to_string(max_n()) + "]");
  }
  return values_[static_cast<std::size_t>(n)];
}

CountTable build_count_table(std::int64_t max_n) {
  if (max_n < 0) {
    throw std::invalid_argument("build_count_table: max_n must be >= 0");
  }
  if (max_n > kMaxCountTableIndex) {
    throw std::length_error("build_count_table: max_n " +
                            std::to_string(max_n) + " exceeds cap " +
                            std::to_string(kMaxCountTableIndex));
  }

  std::vector<BigCount> values(static_cast<std::size_t>(max_n) + 1);
  values[0] = BigCount(1);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    // Signs alternate in pairs; accumulate the two signs separately so the
    // nonnegative BigCount never dips below zero mid-sum.
    BigCount plus;
    BigCount minus;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t gen1 = j * (3 * j - 1) / 2;
      if (gen1 > n) break;
      BigCount& side = (j % 2 == 1) ? plus : minus;
      side += values[static_cast<std::size_t>(n - gen1)];
      const std::int64_t gen2 = j * (3 * j + 1) / 2;
      if (gen2 <= n) {
        side += values[static_cast<std::size_t>(n - gen2)];
      }
    }
    values[static_cast<std::size_t>(n)] = plus - minus;
  }
  return CountTable::from_values(std::move(values));
}

BigCount pfunc_oracle(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("pfunc_oracle: n must be >= 0");
  }
  // ways[m] = partitions of m into parts <= p, with p growing one value at a
  // time (the rolled-up form of the D[p][m] table).
  std::vector<BigCount> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = BigCount(1);
  for (std::int64_t p = 1; p <= n; ++p) {
    for (std::int64_t m = p; m <= n; ++m) {
      ways[static_cast<std::size_t>(m)] +=
          ways[static_cast<std::size_t>(m - p)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace stanley
