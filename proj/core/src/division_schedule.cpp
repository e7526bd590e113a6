#include "stanley/division_schedule.hpp"

#include <stdexcept>
#include <string>

namespace stanley {

DivisionSchedule::DivisionSchedule(std::int64_t n, std::int64_t k)
    : n_(n), k_(k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("division_schedule: requires 1 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }

  entries_.reserve(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    entries_.push_back({(n + i) / k, (n + i) % k});
  }
  threshold_ = k - entries_[0].remainder;

  // The branch pattern is a theorem, but the whole point of this type is
  // that it is checked, not assumed.
  const std::int64_t q0 = entries_[0].quotient;
  const std::int64_t r0 = entries_[0].remainder;
  for (std::int64_t i = 1; i < k; ++i) {
    const auto& e = entries_[static_cast<std::size_t>(i)];
    const bool low = i <= threshold_ - 1;
    const std::int64_t want_q = low ? q0 : q0 + 1;
    const std::int64_t want_r = low ? r0 + i : i - threshold_;
    if (e.quotient != want_q || e.remainder != want_r) {
      throw std::logic_error("division_schedule: branch pattern violated at i=" +
                             std::to_string(i));
    }
  }
}

}  // namespace stanley
