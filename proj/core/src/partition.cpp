#include "stanley/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace stanley {

Partition::Partition(std::vector<std::int64_t> parts)
    : parts_(std::move(parts)) {
  for (std::int64_t part : parts_) {
    if (part < 1) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::int64_t count_occurrences(const Partition& p, std::int64_t k) {
  const auto [first, last] =
      std::equal_range(p.parts().begin(), p.parts().end(), k, std::greater<>());
  return last - first;
}

std::int64_t count_distinct(const Partition& p) {
  std::int64_t distinct = 0;
  std::int64_t prev = 0;
  for (std::int64_t part : p.parts()) {
    if (part != prev) {
      ++distinct;
      prev = part;
    }
  }
  return distinct;
}

PartitionRange::PartitionRange(std::int64_t n) : n_(n) {
  if (n < 0) {
    throw std::invalid_argument("partitions_of: n must be >= 0");
  }
}

PartitionRange::iterator::iterator(std::int64_t n) {
  if (n > 0) {
    current_.parts_.push_back(n);
    current_.weight_ = n;
  }
  // n == 0: the single item is the empty partition.
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  auto& parts = current_.parts_;
  if (parts.empty()) {
    done_ = true;  // the empty partition of 0 was the only item
    return *this;
  }

  // Strip trailing 1s, then split the last part > 1 as (v-1) and refill the
  // freed weight greedily with parts of at most v-1. This steps to the next
  // partition in reverse-lexicographic order.
  std::int64_t freed = 0;
  while (!parts.empty() && parts.back() == 1) {
    parts.pop_back();
    ++freed;
  }
  if (parts.empty()) {
    done_ = true;  // [1,1,...,1] is the last partition
    return *this;
  }

  parts.back() -= 1;
  ++freed;
  const std::int64_t cap = parts.back();
  while (freed > cap) {
    parts.push_back(cap);
    freed -= cap;
  }
  parts.push_back(freed);
  return *this;
}

PartitionRange partitions_of(std::int64_t n) { return PartitionRange(n); }

}  // namespace stanley
