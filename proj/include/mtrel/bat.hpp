#pragma once

#include <cstddef>
#include <cstdint>

#include "mtrel/network.hpp"
#include "mtrel/state_vector.hpp"

namespace mtrel {

enum class Direction { forward, backward };

/// Binary-addition-tree cursor over all 2^length binary vectors.
///
/// Forward order adds one at coordinate 0 and carries toward coordinate
/// length-1, so the k-th emission has forward weight k. Backward order is the
/// mirror image: the carry starts at the last coordinate, and the k-th
/// emission is the coordinate reversal of the forward k-th emission.
///
/// A cursor may be restricted to emission indices [begin, end) so that
/// disjoint ranges can be processed by independent workers.
class BatCursor {
 public:
  explicit BatCursor(std::size_t length, Direction direction = Direction::forward);
  BatCursor(std::size_t length, Direction direction, std::uint64_t begin, std::uint64_t end);

  const StateVector& current() const noexcept { return current_; }
  /// Emission index of current().
  std::uint64_t index() const noexcept { return index_; }
  bool exhausted() const noexcept { return exhausted_; }
  Direction direction() const noexcept { return direction_; }

  /// Steps to the next vector. Returns the lowest (forward) or highest
  /// (backward) coordinate that was set to 1, i.e. the carry stop; every
  /// coordinate passed over on the way was reset to 0. Returns length when
  /// the carry runs off the end and the cursor becomes exhausted.
  std::size_t advance();

 private:
  StateVector current_;
  Direction direction_;
  std::uint64_t index_;
  std::uint64_t end_;
  bool exhausted_;
};

/// Total emissions for a vector of `length` coordinates. Throws GuardError if
/// length is 0 or above StateVector::kMaxLength.
std::uint64_t state_count(std::size_t length);

BatCursor enumerate_forward(std::size_t arc_count);
BatCursor enumerate_backward(std::size_t arc_count);
/// Node-based variant: same forward order over `universe` coordinates.
BatCursor enumerate_node_subsets(std::size_t universe);

/// Sum of 2^i over coordinates i set to 1.
std::uint64_t weight_forward(const StateVector& state) noexcept;
/// Sum of 2^(m-1-i) over coordinates i set to 1.
std::uint64_t weight_backward(const StateVector& state) noexcept;

/// Product over arcs of p_i (coordinate 1) or 1 - p_i (coordinate 0).
double state_probability(const Network& network, const StateVector& state);

}  // namespace mtrel
