#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qindlab/common/bits.hpp"
#include "qindlab/common/rng.hpp"
#include "qindlab/schemes/permutation.hpp"

namespace qindlab::schemes {

// Keyed function from input_bits to output_bits.
struct Prf {
  std::string name;
  int input_bits;
  int output_bits;
  int key_bits;
  std::function<Word(Key, Word)> eval;
};

// F_k(r) = 0.
Prf zero_prf(int input_bits, int output_bits);

// F_k(r): leading output_bits of a 4-round Feistel permutation applied to
// r placed in the high bits of an even-width block.
Prf feistel_prf(int input_bits, int output_bits);

// Independent uniform output per (k, r), derived by hashing.
Prf random_function_prf(int input_bits, int output_bits);

// Symmetric-key scheme with the per-encryption randomness passed explicitly.
// Ciphertexts are `ciphertext_bits` wide; randomness `randomness_bits` wide.
class ClassicalScheme {
 public:
  virtual ~ClassicalScheme() = default;

  virtual std::string name() const = 0;
  virtual int message_bits() const = 0;
  virtual int randomness_bits() const = 0;
  virtual int ciphertext_bits() const = 0;

  virtual Key gen(Rng& rng) const = 0;
  virtual Word enc(Key key, Word r, Word x) const = 0;
  virtual Word dec(Key key, Word y) const = 0;

  // Core split Enc(k, r, x) = r || f(k, r, x).
  virtual bool has_core() const { return false; }
  virtual int core_bits() const;
  virtual Word core(Key key, Word r, Word x) const;
  virtual Word core_inverse(Key key, Word r, Word z) const;

  // In-place completion: (x, a) with a of ciphertext_bits - message_bits bits
  // maps to a ciphertext, bijectively, and (x, 0) maps to Enc(k, r, x).
  virtual bool has_type2_completion() const { return false; }
  virtual Word type2_completion(Key key, Word r, Word x, Word ancilla) const;

  // Number of independently encrypted blocks (1 unless block mode).
  virtual int block_count() const { return 1; }

  int ancilla_bits() const { return ciphertext_bits() - message_bits(); }
};

using SchemePtr = std::shared_ptr<const ClassicalScheme>;

// Enc(k, r, x) = r || (F_k(r) xor x) || 0^pad. With pad > 0 the core carries
// constant padding bits and is no longer length preserving.
SchemePtr prf_scheme(int m, int tau, Prf prf, int core_padding_bits = 0);

// Enc(k, r, x) = pi_k(x || r); Dec returns the leading m bits of pi_k^{-1}(y).
// With tau = 0 the ciphertext is pi_k(x) and the whole of it is the core.
SchemePtr prp_scheme(int m, int tau, FamilyPtr family);

// Randomized ECB over a prp scheme: mu blocks, fresh r_i per block, the
// randomness argument being r_1 || ... || r_mu.
SchemePtr block_scheme(SchemePtr base, int mu);

struct CoreFunction {
  int bits;
  std::function<Word(Key, Word, Word)> f;
  std::function<Word(Key, Word, Word)> f_inverse;
};

// Throws NoCoreDecomposition when the scheme has no (r, f) split.
CoreFunction core_function(const SchemePtr& scheme);

// Core output length equals message length; propagates NoCoreDecomposition.
bool is_quasi_length_preserving(const SchemePtr& scheme);

// Splits a mu*m bit message into m-bit blocks, first block most significant.
std::vector<Word> split_message(Word x, int total_bits, int m);

}  // namespace qindlab::schemes
