#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mtrel {

/// Binary arc-state vector. Coordinate i is stored in bit i of a 64-bit word,
/// so the packed word equals the forward weight of the vector.
class StateVector {
 public:
  static constexpr std::size_t kMaxLength = 63;

  StateVector() = default;
  /// Zero vector of the given length.
  explicit StateVector(std::size_t length);
  StateVector(std::size_t length, std::uint64_t bits);

  /// Parses the bitstring rendering, coordinate 0 leftmost ("11100" is
  /// (1,1,1,0,0)). Throws std::invalid_argument on any other character.
  static StateVector from_string(std::string_view text);

  std::size_t size() const noexcept { return length_; }
  bool operator[](std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  void set(std::size_t i, bool value);
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t count() const noexcept;

  /// Coordinate reversal: result[i] = (*this)[size() - 1 - i].
  StateVector reversed() const;

  /// Bitstring rendering, coordinate 0 leftmost.
  std::string to_string() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

}  // namespace mtrel
