#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace stanley {

/// Arbitrary-precision nonnegative integer used for all partition counts.
///
/// Arithmetic is exact; subtraction below zero throws instead of wrapping,
/// so a broken recurrence surfaces immediately rather than as garbage counts.
class BigCount {
 public:
  BigCount() = default;

  explicit BigCount(std::int64_t value) : value_(value) {
    if (value < 0) {
      throw std::invalid_argument("BigCount: negative value");
    }
  }

  /// Parses a decimal string (the wire form used by reports).
  explicit BigCount(const std::string& decimal)
      : value_(boost::multiprecision::cpp_int(decimal)) {
    if (value_ < 0) {
      throw std::invalid_argument("BigCount: negative value");
    }
  }

  BigCount& operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
  }

  BigCount& operator-=(const BigCount& rhs) {
    if (value_ < rhs.value_) {
      throw std::underflow_error("BigCount: subtraction below zero");
    }
    value_ -= rhs.value_;
    return *this;
  }

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend BigCount operator-(BigCount lhs, const BigCount& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend bool operator==(const BigCount& lhs, const BigCount& rhs) {
    return lhs.value_ == rhs.value_;
  }

  friend std::strong_ordering operator<=>(const BigCount& lhs,
                                          const BigCount& rhs) {
    if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
    if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Decimal rendering; counts are serialized as strings to keep reports exact.
  std::string str() const { return value_.str(); }

  bool is_zero() const { return value_.is_zero(); }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& c);

 private:
  boost::multiprecision::cpp_int value_;
};

}  // namespace stanley
