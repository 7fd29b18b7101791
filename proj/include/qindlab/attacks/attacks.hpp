#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qindlab/games/game.hpp"

namespace qindlab::attacks {

using games::AdversaryFactory;
using games::GameVariant;

struct Rational {
  long long numerator;
  long long denominator;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

struct AttackSpec {
  std::string name;
  std::vector<GameVariant> games;
  int message_bits;
  std::optional<Rational> expected_win_rate;
  AdversaryFactory factory;

  bool supports(GameVariant v) const;
};

// fqIND entanglement attack. Registers: [0, m) holds |0^m>, [m, 2m) holds
// H|0^m>, [2m, 2m + l) is the zero output register. After the challenge the
// output register is measured and dropped, H is applied to [m, 2m), and the
// adversary outputs 0 iff that measurement gives 0^m, so b' = b is a win.
AttackSpec bz_attack(int m);
AdversaryFactory bz_adversary(int m);

// Challenges H|0^m> and H|1^m> (as descriptions in qIND, as unentangled
// registers in gqIND). Applies H to the last m ciphertext wires, which hold
// the core of a quasi-length-preserving scheme, and outputs 0 iff it measures
// 0^m. Throws NotApplicable on schemes that are not quasi-length-preserving
// unless `forced`.
AttackSpec qlp_attack(int m, bool forced = false);
AdversaryFactory qlp_distinguisher(int m, bool forced = false);

// The m = 1 case: |+> versus |->, measured in the Hadamard basis.
AttackSpec hadamard_bit_attack();
AdversaryFactory hadamard_bit_distinguisher();

// Widening of the single-bit attack to m bits: |+>|0^{m-1}> versus
// |->|0^{m-1}>, with H applied to the first core wire (ciphertext wire l - m).
AdversaryFactory lifted_hadamard_bit_distinguisher(int m);

// Outputs a uniform bit; submits a fixed well-formed challenge.
AdversaryFactory random_guesser(int m);
// Outputs `bit` whatever it receives.
AdversaryFactory constant_guesser(int m, int bit);

// IND-qCPA: challenges 0^m and 1^m, outputs 1 iff the trailing m ciphertext
// bits equal 1^m. Wins always when the ciphertext carries x in the clear.
AdversaryFactory plaintext_echo_distinguisher(int m);

// gqIND against a mu-block scheme with block size m. A private wire and
// register 0 share a GHZ state (every wire of register 0 equal to the private
// one); register 1 holds H|0^{mu m}>. After the challenge H is applied to the
// private wire and to the trailing m wires of every ciphertext block; the
// guess is 0 iff all of those read 0.
AdversaryFactory entangled_block_adversary(int m, int mu);

// Issues `queries` learning queries (uniform superposition plaintexts, zero
// output register for type-1 access), measures and discards every response,
// then behaves as `inner`.
AdversaryFactory with_learning_queries(AdversaryFactory inner, int queries);

// Runs a qIND adversary in the gqIND game: pure descriptions become product
// registers; mixed ones are purified with extra private wires, which are
// discarded before the inner adversary sees the ciphertext.
AdversaryFactory as_gqind(AdversaryFactory qind_adversary);

// Registry used by the command line: "bz", "qlp", "hadamard-bit",
// "hadamard-bit-lifted", "random", "entangled-block".
AttackSpec find_attack(const std::string& name, int m, int mu = 1, bool forced = false);

}  // namespace qindlab::attacks
