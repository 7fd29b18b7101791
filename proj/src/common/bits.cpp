#include "qindlab/common/bits.hpp"

#include <bit>

#include "qindlab/common/error.hpp"

namespace qindlab {

int popcount(Word value) { return std::popcount(value); }

int dot_parity(Word a, Word b) { return std::popcount(a & b) & 1; }

Word parse_bits(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordBits)) {
    throw InvalidArgument("bitstring must have between 1 and 63 characters");
  }
  Word value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidArgument("bitstring may contain only 0 and 1");
    value = (value << 1) | static_cast<Word>(c - '0');
  }
  return value;
}

std::string format_bits(Word value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (bit_at(value, width, i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Word extract_bits(Word index, int total, const std::vector<int>& wires) {
  Word out = 0;
  for (int w : wires) out = (out << 1) | ((index >> (total - 1 - w)) & 1U);
  return out;
}

Word deposit_bits(Word index, int total, const std::vector<int>& wires, Word value) {
  const int k = static_cast<int>(wires.size());
  for (int i = 0; i < k; ++i) {
    const Word bit = (value >> (k - 1 - i)) & 1U;
    const int shift = total - 1 - wires[static_cast<std::size_t>(i)];
    index = (index & ~(Word{1} << shift)) | (bit << shift);
  }
  return index;
}

}  // namespace qindlab
