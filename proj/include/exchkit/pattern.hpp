#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exchkit/atom.hpp"

namespace exchkit {

/// Collision shape of an index tuple: the set partition of positions
/// {0..k-1} induced by equal indices, written as a restricted growth
/// string. slots()[i] is the block id of position i and block ids appear
/// in order of first occurrence, so every pattern has one representative.
class IndexPattern {
public:
  /// Validates the restricted growth property: slots[0] == 0 and
  /// slots[i] <= max(slots[0..i-1]) + 1.
  static IndexPattern from_slots(std::vector<std::uint32_t> slots);
  static IndexPattern identity(int length);

  int length() const { return static_cast<int>(slots_.size()); }
  int image_size() const { return image_size_; }
  std::uint32_t slot(int position) const { return slots_[static_cast<std::size_t>(position)]; }
  const std::vector<std::uint32_t>& slots() const { return slots_; }

  /// (y_1..y_j) -> (y_{slot(0)}, ..., y_{slot(k-1)}).
  Tuple expand(const Tuple& base) const;

  /// Inverse of expand: the base j-tuple when `t` is constant on every
  /// block of the pattern, nullopt otherwise.
  std::optional<Tuple> compress(const Tuple& t) const;

  bool operator==(const IndexPattern&) const = default;
  auto operator<=>(const IndexPattern&) const = default;

private:
  IndexPattern(std::vector<std::uint32_t> slots, int image_size);

  std::vector<std::uint32_t> slots_;
  int image_size_ = 0;
};

/// All patterns of the given length (restricted growth strings), in
/// lexicographic slot order.
std::vector<IndexPattern> enumerate_patterns(int length);

/// Patterns of the given length whose image has exactly `image_size` blocks.
std::vector<IndexPattern> enumerate_patterns(int length, int image_size);

} // namespace exchkit
