#include "stanley/tiling.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace stanley {

namespace {

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " +
                                std::to_string(value));
  }
}

void take_tiles(std::map<std::int64_t, std::int64_t>& stacks, std::int64_t pos,
                std::int64_t count) {
  auto it = stacks.find(pos);
  const std::int64_t have = (it == stacks.end()) ? 0 : it->second;
  if (have < count) {
    throw std::domain_error("tiling has " + std::to_string(have) +
                            " tiles at position " + std::to_string(pos) +
                            ", map needs " + std::to_string(count));
  }
  if (have == count) {
    stacks.erase(it);
  } else {
    it->second -= count;
  }
}

void put_tiles(std::map<std::int64_t, std::int64_t>& stacks, std::int64_t pos,
               std::int64_t count) {
  stacks[pos] += count;
}

}  // namespace

Tiling Tiling::from_stacks(std::map<std::int64_t, std::int64_t> stacks) {
  for (const auto& [pos, height] : stacks) {
    if (pos < 1) {
      throw std::invalid_argument("Tiling: positions must be >= 1");
    }
    if (height < 1) {
      throw std::invalid_argument("Tiling: stored heights must be >= 1");
    }
  }
  Tiling t;
  t.stacks_ = std::move(stacks);
  return t;
}

std::int64_t Tiling::height(std::int64_t pos) const {
  auto it = stacks_.find(pos);
  return it == stacks_.end() ? 0 : it->second;
}

std::int64_t Tiling::measure_exponent() const {
  std::int64_t exponent = 0;
  for (const auto& [pos, height] : stacks_) {
    exponent += pos * height;
  }
  return exponent;
}

std::string Tiling::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [pos, height] : stacks_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(pos) + ":" + std::to_string(height);
  }
  return out + "}";
}

Tiling tiling_from_partition(const Partition& p) {
  std::map<std::int64_t, std::int64_t> stacks;
  for (std::int64_t part : p.parts()) {
    ++stacks[part];
  }
  return Tiling::from_stacks(std::move(stacks));
}

Partition partition_from_tiling(const Tiling& t) {
  std::vector<std::int64_t> parts;
  for (auto it = t.stacks().rbegin(); it != t.stacks().rend(); ++it) {
    parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return Partition(std::move(parts));
}

Tiling map_T(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t i) {
  require_positive(r, "r");
  require_positive(k, "k");
  if (i < 1 || i > k - 1) {
    throw std::invalid_argument("map_T: i must satisfy 1 <= i <= k-1, got i=" +
                                std::to_string(i) + " k=" + std::to_string(k));
  }
  auto stacks = t.stacks();
  take_tiles(stacks, r, k - i);
  put_tiles(stacks, k, r);
  return Tiling::from_stacks(std::move(stacks));
}

Tiling map_S(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t i) {
  require_positive(r, "r");
  require_positive(k, "k");
  if (i < 1 || i > k - 1) {
    throw std::invalid_argument("map_S: i must satisfy 1 <= i <= k-1, got i=" +
                                std::to_string(i) + " k=" + std::to_string(k));
  }
  auto stacks = t.stacks();
  take_tiles(stacks, k, r);
  put_tiles(stacks, r, k - i);
  return Tiling::from_stacks(std::move(stacks));
}

Tiling map_Q(const Tiling& t, std::int64_t r, std::int64_t i) {
  require_positive(r, "r");
  require_positive(i, "i");
  auto stacks = t.stacks();
  take_tiles(stacks, r, i);
  put_tiles(stacks, i, r);
  return Tiling::from_stacks(std::move(stacks));
}

Tiling map_Z(const Tiling& t, std::int64_t r, std::int64_t i) {
  return map_Q(t, i, r);
}

Tiling map_F(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t j) {
  require_positive(r, "r");
  require_positive(k, "k");
  require_positive(j, "j");
  auto stacks = t.stacks();
  take_tiles(stacks, r, 1);
  put_tiles(stacks, k, j);
  return Tiling::from_stacks(std::move(stacks));
}

Tiling map_G(const Tiling& t, std::int64_t r, std::int64_t k, std::int64_t j) {
  require_positive(r, "r");
  require_positive(k, "k");
  require_positive(j, "j");
  auto stacks = t.stacks();
  take_tiles(stacks, k, j);
  put_tiles(stacks, r, 1);
  return Tiling::from_stacks(std::move(stacks));
}

}  // namespace stanley
