#pragma once

#include <vector>

#include "qindlab/quantum/state.hpp"

namespace qindlab::quantum::detail {

// offsets[s] is the full-register index contribution of sub-index s on `wires`.
inline std::vector<Word> wire_offsets(const Wires& wires, int total) {
  const Word sub_dim = dimension_of(static_cast<int>(wires.size()));
  std::vector<Word> offsets(static_cast<std::size_t>(sub_dim));
  for (Word s = 0; s < sub_dim; ++s) offsets[s] = deposit_bits(0, total, wires, s);
  return offsets;
}

// Wires of a `total`-wire register not listed in `wires`, ascending.
inline Wires complement_wires(const Wires& wires, int total) {
  std::vector<bool> listed(static_cast<std::size_t>(total), false);
  for (int w : wires) listed[static_cast<std::size_t>(w)] = true;
  Wires rest;
  for (int w = 0; w < total; ++w) {
    if (!listed[static_cast<std::size_t>(w)]) rest.push_back(w);
  }
  return rest;
}

}  // namespace qindlab::quantum::detail
