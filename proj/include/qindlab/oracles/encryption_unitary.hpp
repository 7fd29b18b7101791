#pragma once

#include "qindlab/quantum/state.hpp"
#include "qindlab/schemes/scheme.hpp"

namespace qindlab::oracles {

using quantum::BasisPermutation;
using quantum::Complex;
using quantum::Matrix;
using schemes::Key;
using schemes::SchemePtr;

enum class OracleKind { Type1, Type2 };
enum class Direction { Encrypt, Decrypt };

// A scheme lifted to a basis-permuting unitary at a fixed key and randomness.
//
// Wire layouts (wire 0 first):
//   type-1 encrypt: x (m wires), y (l wires);       |x, y> -> |x, y xor Enc(x)>
//   type-1 decrypt: y (l wires), x (m wires);       |y, x> -> |y, x xor Dec(y)>
//   type-2 encrypt: x (m wires), a (l - m wires);   |x, a> -> |completion(x, a)>
//   type-2 decrypt: the inverse permutation on l wires.
struct EncryptionUnitary {
  OracleKind kind;
  Direction direction;
  SchemePtr scheme;
  Key key;
  Word randomness;
  BasisPermutation permutation;

  int num_wires() const { return permutation.num_wires(); }
  Matrix matrix() const { return permutation.to_unitary().matrix(); }
};

EncryptionUnitary type1_unitary(const SchemePtr& scheme, Key key, Word r);
EncryptionUnitary type1_decryption_unitary(const SchemePtr& scheme, Key key, Word r);

// Throws NotApplicable when the scheme declares no completion.
EncryptionUnitary type2_unitary(const SchemePtr& scheme, Key key, Word r);

// (U2_Enc)^dagger, the type-2 decryption oracle.
EncryptionUnitary adjoint(const EncryptionUnitary& u);

// Type-1 oracle assembled from a type-2 oracle and its inverse: U2 on (x, a),
// a transversal CNOT copy of the ciphertext into an l-wire output register,
// then U2^dagger. The circuit is simulated state by state on 2l wires.
EncryptionUnitary type1_from_type2(const EncryptionUnitary& u2);

// Type-2 action on ancilla-zero inputs assembled from type-1 oracles: encrypt
// into an l-wire register, then clear the plaintext register with the
// decryption oracle. Column x of the result is the l-wire output state for
// input |x>; the plaintext register must return to |0^m>.
Matrix type2_from_type1(const EncryptionUnitary& u1_enc, const EncryptionUnitary& u1_dec);

// Columns of a type-2 oracle on inputs |x, 0^{l-m}>, comparable with the
// output of type2_from_type1.
Matrix ancilla_zero_restriction(const EncryptionUnitary& u2);

// Entries of the matrix all in {0, 1} with one 1 per row and column.
bool is_permutation_matrix(const Matrix& m, double tolerance = 1e-12);

}  // namespace qindlab::oracles
