#pragma once

#include <cstdint>

#include "stanley/big_count.hpp"
#include "stanley/count_table.hpp"

namespace stanley {

// Partition statistics, each in two independent flavors: a closed form over a
// CountTable and a definitional brute force over the enumeration stream. All
// functions are pure given an immutable table and safe to call concurrently.

/// Q_k(m): total occurrences of the part value k across all partitions of m,
/// by the telescoping formula sum_{j=1..floor(m/k)} P(m - j*k). Empty sum
/// (m < k) is 0. Requires k >= 1, m >= 0 and table coverage up to m
/// (std::out_of_range otherwise).
BigCount occurrences_formula(std::int64_t k, std::int64_t m,
                             const CountTable& table);

/// Q_k(m) by full enumeration of the partitions of m.
BigCount occurrences_enumerated(std::int64_t k, std::int64_t m);

/// B(n): sum of the number of distinct part values over all partitions of n,
/// as 1 + P(1) + ... + P(n-1). Requires n >= 1 and table coverage up to n-1.
BigCount distinct_sum_formula(std::int64_t n, const CountTable& table);

/// B(n) by full enumeration.
BigCount distinct_sum_enumerated(std::int64_t n);

/// A(n) = sum_{i=0..k-1} Q_k(n+i). Requires 1 <= k <= n (the identity's
/// stated scope; std::invalid_argument outside it) and table coverage up to
/// n+k-1.
BigCount a_sum(std::int64_t n, std::int64_t k, const CountTable& table);

/// V_p^q(m): partitions of m containing the part q at least p times, as
/// P(m - p*q) when p*q <= m, else 0 (removing p forced copies of q is a
/// bijection onto the partitions of m - p*q). Requires p, q >= 1, m >= 0 and
/// table coverage of the looked-up index.
BigCount v_count(std::int64_t p, std::int64_t q, std::int64_t m,
                 const CountTable& table);

/// V_p^q(m) by full enumeration.
BigCount v_count_enumerated(std::int64_t p, std::int64_t q, std::int64_t m);

}  // namespace stanley
