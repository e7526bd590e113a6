#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "stanley/partition.hpp"

namespace stanley {

/// A tiling of the one-row board: finitely many stacks of black tiles keyed
/// by position. White tiles carry no information and are implicit; positions
/// with no black tiles are simply absent. Immutable value type.
class Tiling {
 public:
  Tiling() = default;

  /// Validates positions >= 1 and heights >= 1. Throws std::invalid_argument.
  static Tiling from_stacks(std::map<std::int64_t, std::int64_t> stacks);

  const std::map<std::int64_t, std::int64_t>& stacks() const {
    return stacks_;
  }

  /// Stack height at pos; 0 when no black tile sits there.
  std::int64_t height(std::int64_t pos) const;

  bool empty() const { return stacks_.empty(); }

  /// Exponent of the tiling's measure: sum of position * height. Equals the
  /// weight of the corresponding partition.
  std::int64_t measure_exponent() const;

  /// "{1:2, 3:1}" — debug rendering, ascending by position.
  std::string to_string() const;

  bool operator==(const Tiling&) const = default;
  auto operator<=>(const Tiling&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> stacks_;
};

/// Tiling with one black tile per part: stack height at v = multiplicity of v.
Tiling tiling_from_partition(const Partition& p);

/// Inverse of tiling_from_partition; round trip is the identity both ways.
Partition partition_from_tiling(const Tiling& t);

inline std::int64_t measure_exponent(const Tiling& t) {
  return t.measure_exponent();
}

// The three invertible stack-rewriting maps. Parameter errors (values outside
// the family's index range) throw std::invalid_argument; domain errors (the
// tiling lacks the tiles the map would remove) throw std::domain_error.

/// Removes k-i tiles at position r, adds r tiles at position k.
/// Requires 1 <= i <= k-1 and height(r) >= k-i. Exponent delta: +i*r.
Tiling map_T(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t i);

/// Inverse of map_T: removes r tiles at k, adds k-i tiles at r.
/// Requires height(k) >= r. Exponent delta: -i*r.
Tiling map_S(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t i);

/// Removes i tiles at position r, adds r tiles at position i.
/// Requires height(r) >= i. Exponent unchanged.
Tiling map_Q(const Tiling& t, std::int64_t r, std::int64_t i);

/// Inverse of map_Q (same rewrite with the roles of r and i swapped).
Tiling map_Z(const Tiling& t, std::int64_t r, std::int64_t i);

/// Removes one tile at position r, adds j tiles at position k.
/// Requires height(r) >= 1. Exponent delta: k*j - r (may be negative; the
/// result is still a valid tiling).
Tiling map_F(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t j);

/// Inverse of map_F: removes j tiles at k, restores one tile at r.
/// Requires height(k) >= j.
Tiling map_G(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t j);

}  // namespace stanley
