#pragma once

#include <cstdint>
#include <vector>

#include "stanley/big_count.hpp"

namespace stanley {

/// Immutable table of partition-function values P(0..max_n).
///
/// Safe to share across threads once built. Two independent algorithms can
/// produce the values it holds: the pentagonal-number recurrence
/// (build_count_table) and the parts-bounded dynamic program (pfunc_oracle);
/// keeping both around makes the table self-validating.
class CountTable {
 public:
  /// Wraps precomputed values. Validates only that the table is nonempty and
  /// starts with P(0) = 1; callers own the correctness of the rest (tests use
  /// this to inject deliberately wrong tables).
  static CountTable from_values(std::vector<BigCount> values);

  std::int64_t max_n() const {
    return static_cast<std::int64_t>(values_.size()) - 1;
  }

  /// P(n); throws std::out_of_range when n is outside [0, max_n].
  const BigCount& at(std::int64_t n) const;

 private:
  explicit CountTable(std::vector<BigCount> values)
      : values_(std::move(values)) {}

  std::vector<BigCount> values_;
};

/// Builds P(0..max_n) by the pentagonal-number recurrence
///   P(n) = sum_{j>=1} (-1)^{j+1} [P(n - j(3j-1)/2) + P(n - j(3j+1)/2)],
/// terms with negative argument omitted.
///
/// Throws std::invalid_argument for max_n < 0 and std::length_error above the
/// implementation cap (the table would no longer be desk-scale).
CountTable build_count_table(std::int64_t max_n);

/// Largest max_n accepted by build_count_table.
inline constexpr std::int64_t kMaxCountTableIndex = 100000;

/// P(n) by a dynamic program over the largest allowed part (coin-change
/// style). Shares no code with the pentagonal recurrence; serves as its
/// independent oracle.
BigCount pfunc_oracle(std::int64_t n);

}  // namespace stanley
