#include "mtrel/bat.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "mtrel/error.hpp"

namespace mtrel {

StateVector::StateVector(std::size_t length) : StateVector(length, 0) {}

StateVector::StateVector(std::size_t length, std::uint64_t bits) : bits_(bits), length_(length) {
  if (length > kMaxLength) {
    throw GuardError("state vector length " + std::to_string(length) + " exceeds " +
                     std::to_string(kMaxLength));
  }
  if (length < 64 && (bits >> length) != 0) {
    throw std::invalid_argument("state bits exceed vector length");
  }
}

StateVector StateVector::from_string(std::string_view text) {
  if (text.size() > kMaxLength) throw std::invalid_argument("bitstring too long");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
  }
  return StateVector(text.size(), bits);
}

void StateVector::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("state coordinate out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

std::size_t StateVector::count() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

StateVector StateVector::reversed() const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) out |= std::uint64_t{1} << (length_ - 1 - i);
  }
  return StateVector(length_, out);
}

std::string StateVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) out[i] = '1';
  }
  return out;
}

std::uint64_t state_count(std::size_t length) {
  if (length == 0) throw GuardError("enumeration needs at least one coordinate");
  if (length > StateVector::kMaxLength) {
    throw GuardError("cannot enumerate 2^" + std::to_string(length) + " vectors");
  }
  return std::uint64_t{1} << length;
}

BatCursor::BatCursor(std::size_t length, Direction direction)
    : BatCursor(length, direction, 0, state_count(length)) {}

BatCursor::BatCursor(std::size_t length, Direction direction, std::uint64_t begin,
                     std::uint64_t end)
    : direction_(direction), index_(begin), end_(end) {
  const std::uint64_t total = state_count(length);
  if (begin > end || end > total) throw std::invalid_argument("invalid enumeration range");
  const StateVector start(length, begin == total ? 0 : begin);
  current_ = direction == Direction::forward ? start : start.reversed();
  exhausted_ = begin == end;
}

std::size_t BatCursor::advance() {
  const std::size_t m = current_.size();
  if (exhausted_) return m;
  // Coordinate visiting order: 0,1,..,m-1 forward; m-1,..,0 backward.
  auto coord = [&](std::size_t step) { return direction_ == Direction::forward ? step : m - 1 - step; };
  std::size_t i = 0;
  while (i < m && current_[coord(i)]) {
    current_.set(coord(i), false);
    ++i;
  }
  ++index_;
  if (i == m || index_ == end_) {
    exhausted_ = true;
    if (i == m) return m;
  }
  current_.set(coord(i), true);
  return coord(i);
}

BatCursor enumerate_forward(std::size_t arc_count) {
  return BatCursor(arc_count, Direction::forward);
}

BatCursor enumerate_backward(std::size_t arc_count) {
  return BatCursor(arc_count, Direction::backward);
}

BatCursor enumerate_node_subsets(std::size_t universe) {
  return BatCursor(universe, Direction::forward);
}

std::uint64_t weight_forward(const StateVector& state) noexcept { return state.bits(); }

std::uint64_t weight_backward(const StateVector& state) noexcept {
  std::uint64_t w = 0;
  const std::size_t m = state.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (state[i]) w |= std::uint64_t{1} << (m - 1 - i);
  }
  return w;
}

double state_probability(const Network& network, const StateVector& state) {
  if (state.size() != network.arc_count()) {
    throw std::invalid_argument("state length does not match arc count");
  }
  double pr = 1.0;
  for (const Arc& arc : network.arcs()) {
    pr *= state[arc.id] ? arc.reliability : 1.0 - arc.reliability;
  }
  return pr;
}

}  // namespace mtrel
