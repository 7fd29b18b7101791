#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "qindlab/common/bits.hpp"
#include "qindlab/common/rng.hpp"

namespace qindlab::schemes {

using Key = std::uint64_t;

// Keyed family of permutations on `block_bits`-bit blocks.
class PermutationFamily {
 public:
  virtual ~PermutationFamily() = default;

  virtual std::string name() const = 0;
  virtual int block_bits() const = 0;
  virtual Key gen(Rng& rng) const = 0;
  virtual Word forward(Key key, Word block) const = 0;
  virtual Word inverse(Key key, Word block) const = 0;
};

using FamilyPtr = std::shared_ptr<const PermutationFamily>;

// Uniformly random permutation chosen by a 64-bit seed. Blocks of up to 16
// bits use an explicit Fisher-Yates table (regenerated deterministically and
// kept in a small cache); wider blocks are sampled lazily per key and
// memoized, so they are consistent but depend on query order.
FamilyPtr ideal_prp_family(int block_bits);

// Round function F(key, round, right_half) -> half-width word.
using RoundFunction = std::function<Word(Key, int, Word)>;

// Balanced Feistel network with 16-bit keys. Each round maps
// (L, R) -> (R, L xor F(key, i, R)).
FamilyPtr feistel_prp_family(int block_bits, int rounds);
FamilyPtr feistel_prp_family(int block_bits, int rounds, RoundFunction round_function);

FamilyPtr identity_family(int block_bits);

}  // namespace qindlab::schemes
