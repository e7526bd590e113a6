#pragma once

#include <cstdint>
#include <vector>

namespace stanley {

struct ScheduleEntry {
  std::int64_t quotient;   // q_i in n+i = q_i*k + r_i
  std::int64_t remainder;  // r_i, 0 <= r_i < k

  bool operator==(const ScheduleEntry&) const = default;
};

/// Quotient/remainder schedule of n+i by k for i = 0..k-1, with the
/// threshold s = k - r_0 at which the quotient steps up:
///   q_i = q_0 and r_i = r_0 + i   for 1 <= i <= s-1,
///   q_i = q_0 + 1 and r_i = i - s for i >= s.
///
/// Each entry is computed by plain integer division; the constructor then
/// checks the branch pattern above and throws std::logic_error if it ever
/// fails to hold.
class DivisionSchedule {
 public:
  /// Requires 1 <= k <= n; throws std::invalid_argument otherwise.
  DivisionSchedule(std::int64_t n, std::int64_t k);

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }
  /// s = k - r_0.
  std::int64_t threshold() const { return threshold_; }
  const std::vector<ScheduleEntry>& entries() const { return entries_; }

 private:
  std::int64_t n_;
  std::int64_t k_;
  std::int64_t threshold_;
  std::vector<ScheduleEntry> entries_;
};

inline DivisionSchedule division_schedule(std::int64_t n, std::int64_t k) {
  return DivisionSchedule(n, k);
}

}  // namespace stanley
