#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "stanley/big_count.hpp"
#include "stanley/count_table.hpp"

using stanley::BigCount;
using stanley::build_count_table;
using stanley::CountTable;
using stanley::pfunc_oracle;

TEST_CASE("big count arithmetic is exact and nonnegative") {
  CHECK(BigCount() == BigCount(0));
  CHECK(BigCount(2) + BigCount(3) == BigCount(5));
  CHECK(BigCount(5) - BigCount(5) == BigCount(0));
  CHECK(BigCount(3) < BigCount(4));
  CHECK(BigCount("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK(BigCount("999") + BigCount(1) == BigCount(1000));
  CHECK_THROWS_AS(BigCount(-1), std::invalid_argument);
  CHECK_THROWS_AS(BigCount("-7"), std::invalid_argument);
  CHECK_THROWS_AS(BigCount(2) - BigCount(3), std::underflow_error);
}

TEST_CASE("table of size zero holds only the empty partition") {
  const CountTable table = build_count_table(0);
  CHECK(table.max_n() == 0);
  CHECK(table.at(0) == BigCount(1));
}

TEST_CASE("table values up to 9 match exhaustive enumeration") {
  // Frozen from the recursive oracle (and recomputed below).
  const std::int64_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  const CountTable table = build_count_table(9);
  for (std::int64_t n = 0; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(table.at(n) == BigCount(expected[n]));
    CHECK(table.at(n) == BigCount(oracle::partition_count(n)));
  }
}

TEST_CASE("dp oracle matches enumeration and known values") {
  CHECK(pfunc_oracle(0) == BigCount(1));
  CHECK(pfunc_oracle(7) == BigCount(15));
  CHECK(pfunc_oracle(12) == BigCount(77));
  for (std::int64_t n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(pfunc_oracle(n) == BigCount(oracle::partition_count(n)));
  }
}

TEST_CASE("recurrence and dp agree through 200") {
  const CountTable table = build_count_table(200);
  for (std::int64_t n = 0; n <= 200; n += (n < 60 ? 1 : 7)) {
    CAPTURE(n);
    CHECK(table.at(n) == pfunc_oracle(n));
  }
  CHECK(table.at(100) == BigCount(190569292));
  CHECK(table.at(200).str() == "3972999029388");
}

TEST_CASE("counts grow monotonically from n = 1") {
  const CountTable table = build_count_table(200);
  for (std::int64_t n = 1; n < 200; ++n) {
    CAPTURE(n);
    CHECK(table.at(n + 1) >= table.at(n));
  }
}

TEST_CASE("counts above 64-bit range stay exact") {
  // P(450) has 21 digits; any fixed-width path would have wrapped.
  const CountTable table = build_count_table(450);
  CHECK(table.at(450) == pfunc_oracle(450));
  CHECK(table.at(450).str().size() == 21);
}

TEST_CASE("bad inputs fail cleanly") {
  CHECK_THROWS_AS(build_count_table(-1), std::invalid_argument);
  CHECK_THROWS_AS(build_count_table(stanley::kMaxCountTableIndex + 1),
                  std::length_error);
  CHECK_THROWS_AS(pfunc_oracle(-1), std::invalid_argument);
  const CountTable table = build_count_table(5);
  CHECK_THROWS_AS(table.at(6), std::out_of_range);
  CHECK_THROWS_AS(table.at(-1), std::out_of_range);
}

TEST_CASE("from_values validates the base case") {
  CHECK_THROWS_AS(CountTable::from_values({}), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::from_values({BigCount(2)}),
                  std::invalid_argument);
  const CountTable table =
      CountTable::from_values({BigCount(1), BigCount(1), BigCount(2)});
  CHECK(table.max_n() == 2);
  CHECK(table.at(2) == BigCount(2));
}
