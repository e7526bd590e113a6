#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "stanley/big_count.hpp"
#include "stanley/count_table.hpp"
#include "stanley/partition.hpp"

using stanley::BigCount;
using stanley::count_distinct;
using stanley::count_occurrences;
using stanley::Partition;
using stanley::partitions_of;

namespace {

std::vector<Partition> collect(std::int64_t n) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(n)) {
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("partition construction normalizes and validates") {
  const Partition p({1, 3, 1});
  CHECK(p.parts() == std::vector<std::int64_t>{3, 1, 1});
  CHECK(p.weight() == 5);
  CHECK(Partition().empty());
  CHECK(Partition().weight() == 0);
  CHECK(Partition({4}).to_string() == "4");
  CHECK(p.to_string() == "3,1,1");
  CHECK(Partition().to_string() == "");
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("occurrence counting") {
  CHECK(count_occurrences(Partition({2, 1, 1}), 1) == 2);
  CHECK(count_occurrences(Partition({3, 3, 1}), 3) == 2);
  CHECK(count_occurrences(Partition({4}), 2) == 0);
  CHECK(count_occurrences(Partition(), 1) == 0);
}

TEST_CASE("distinct counting") {
  CHECK(count_distinct(Partition({2, 1, 1})) == 2);
  CHECK(count_distinct(Partition({5})) == 1);
  CHECK(count_distinct(Partition({3, 2, 2, 1, 1, 1})) == 3);
  CHECK(count_distinct(Partition()) == 0);
}

TEST_CASE("weight zero yields exactly the empty partition") {
  const auto items = collect(0);
  REQUIRE(items.size() == 1);
  CHECK(items[0].empty());
}

TEST_CASE("weight four yields the documented sequence") {
  const auto items = collect(4);
  const std::vector<std::vector<std::int64_t>> expected = {
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(items.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(items[i].parts() == expected[i]);
  }
}

TEST_CASE("stream length equals the partition count") {
  CHECK(collect(30).size() == 5604);
  const auto table = stanley::build_count_table(40);
  for (std::int64_t n = 0; n <= 25; ++n) {
    CAPTURE(n);
    std::int64_t streamed = 0;
    for ([[maybe_unused]] const Partition& p : partitions_of(n)) ++streamed;
    CHECK(BigCount(streamed) == table.at(n));
  }
}

TEST_CASE("stream is strictly decreasing in reverse-lexicographic order") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    std::vector<std::int64_t> previous;
    bool first = true;
    for (const Partition& p : partitions_of(n)) {
      if (!first) {
        CHECK(std::lexicographical_compare(p.parts().begin(), p.parts().end(),
                                           previous.begin(), previous.end()));
      }
      previous = p.parts();
      first = false;
    }
  }
}

TEST_CASE("every streamed partition is valid and on weight") {
  for (std::int64_t n = 0; n <= 15; ++n) {
    for (const Partition& p : partitions_of(n)) {
      CHECK(p.weight() == n);
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < p.parts().size(); ++i) {
        CHECK(p.parts()[i] >= 1);
        if (i > 0) CHECK(p.parts()[i - 1] >= p.parts()[i]);
        sum += p.parts()[i];
      }
      CHECK(sum == n);
    }
  }
}

TEST_CASE("stream agrees with the recursive oracle as a set") {
  for (std::int64_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    std::set<std::vector<std::int64_t>> streamed;
    for (const Partition& p : partitions_of(n)) {
      CHECK(streamed.insert(p.parts()).second);  // no duplicates
    }
    const auto expected = oracle::all_partitions(n);
    CHECK(streamed.size() == expected.size());
    for (const auto& parts : expected) {
      CHECK(streamed.contains(parts));
    }
  }
}

TEST_CASE("negative weight is rejected") {
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}
