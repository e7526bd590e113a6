#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace stanley {

/// An unordered partition: positive parts stored in weakly decreasing order.
class Partition {
 public:
  Partition() = default;

  /// Accepts parts in any order (a partition is a multiset); stores them
  /// sorted descending. Throws std::invalid_argument on nonpositive parts.
  explicit Partition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// "3,1,1" — the CLI/debug rendering; empty partition renders as "".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  friend class PartitionRange;

  std::vector<std::int64_t> parts_;
  std::int64_t weight_ = 0;
};

/// Multiplicity of the part value k in p.
std::int64_t count_occurrences(const Partition& p, std::int64_t k);

/// Number of distinct part values in p (0 for the empty partition).
std::int64_t count_distinct(const Partition& p);

/// Lazily enumerates all partitions of n in reverse-lexicographic order,
/// [n] first and [1,1,...,1] last; exactly P(n) items. Single-consumer per
/// range; independent ranges may run concurrently.
class PartitionRange {
 public:
  explicit PartitionRange(std::int64_t n);

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() : done_(true) {}
    explicit iterator(std::int64_t n);

    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }

    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& lhs, const iterator& rhs) {
      return lhs.done_ == rhs.done_;
    }

   private:
    Partition current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  std::int64_t n_;
};

/// Stream of every partition of n; throws std::invalid_argument for n < 0.
PartitionRange partitions_of(std::int64_t n);

}  // namespace stanley
