#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qindlab {

// Bitstrings are carried as unsigned words together with an explicit width.
// The leftmost character of a textual bitstring (and wire 0 of a register)
// is the most significant bit.
using Word = std::uint64_t;

inline constexpr int kMaxWordBits = 63;

constexpr Word low_mask(int width) {
  return width <= 0 ? Word{0} : (width >= 64 ? ~Word{0} : ((Word{1} << width) - 1));
}

constexpr Word dimension_of(int width) { return Word{1} << width; }

// a || b where b is `low_width` bits wide.
constexpr Word concat(Word high, Word low, int low_width) {
  return (high << low_width) | (low & low_mask(low_width));
}

// Bit at `position` counted from the most significant end of a `width`-bit word.
constexpr int bit_at(Word value, int width, int position) {
  return static_cast<int>((value >> (width - 1 - position)) & 1U);
}

// Top `count` bits of a `width`-bit word.
constexpr Word leading_bits(Word value, int width, int count) {
  return (value >> (width - count)) & low_mask(count);
}

int popcount(Word value);

// Bitwise inner product modulo two.
int dot_parity(Word a, Word b);

Word parse_bits(std::string_view text);
std::string format_bits(Word value, int width);

// Gathers the bits of `index` (a `total`-wire basis index) found on `wires`,
// first listed wire most significant.
Word extract_bits(Word index, int total, const std::vector<int>& wires);

// Writes `value` (|wires| bits, first wire most significant) into `index`.
Word deposit_bits(Word index, int total, const std::vector<int>& wires, Word value);

}  // namespace qindlab
