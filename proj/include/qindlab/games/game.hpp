#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qindlab/common/rng.hpp"
#include "qindlab/quantum/circuit.hpp"
#include "qindlab/quantum/system.hpp"
#include "qindlab/schemes/scheme.hpp"

namespace qindlab::games {

using quantum::QuantumSystem;
using quantum::StateDescription;
using quantum::Wires;
using schemes::Key;
using schemes::SchemePtr;

enum class GameVariant { IndQcpa, FqindQcpa, QindQcpa, GqindQcpa };

std::string to_string(GameVariant v);
// Accepts "ind", "fqind", "qind", "gqind".
GameVariant parse_game_variant(const std::string& text);

// Learning queries go to type-2 oracles in qIND and gqIND, to type-1 oracles
// otherwise.
bool uses_type2_access(GameVariant v);

struct GameContext {
  GameVariant variant;
  SchemePtr scheme;
  int message_bits;
  int randomness_bits;
  int ciphertext_bits;
};

// A learning query: the oracle acts on the trailing wires of `system` (m + l
// wires for type-1 access, m wires for type-2 access, which the challenger
// extends with l - m zero ancillas). The leading `private_wires` stay with the
// adversary and are never touched.
struct QueryRequest {
  QuantumSystem system;
  int private_wires = 0;
};

struct QueryResponse {
  QuantumSystem system;
  int private_wires = 0;
};

struct ClassicalChallenge {
  Word x0;
  Word x1;
};

struct DescriptionChallenge {
  StateDescription first;
  StateDescription second;
};

// Two message registers (and, in fqIND, an output register) designated inside
// a state prepared by the adversary. Every other wire is private.
struct RegisterChallenge {
  QuantumSystem state;
  Wires first;
  Wires second;
  Wires output;
};

using ChallengeTemplate = std::variant<ClassicalChallenge, DescriptionChallenge, RegisterChallenge>;

// What the adversary gets back after the challenge.
//   IND-qCPA: `ciphertext` only.
//   fqIND:    the whole relayed state, wire layout unchanged.
//   qIND:     the l ciphertext wires.
//   gqIND:    the adversary's private wires (original order) followed by the
//             l ciphertext wires.
struct ChallengeResponse {
  std::optional<Word> ciphertext;
  std::optional<QuantumSystem> system;
  Wires ciphertext_wires;
  int private_wires = 0;
};

class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual void begin(const GameContext& ctx) { ctx_ = ctx; }
  virtual std::optional<QueryRequest> next_query() { return std::nullopt; }
  virtual void receive_query_response(QueryResponse, Rng&) {}
  virtual ChallengeTemplate produce_challenge() = 0;
  virtual void receive_challenge(ChallengeResponse response) = 0;
  // Probability, over the adversary's own measurements, that it outputs 1.
  virtual double guess_one_probability() const = 0;
  // One sampled guess.
  virtual int final_guess(Rng& rng) = 0;

 protected:
  const GameContext& context() const { return ctx_; }

 private:
  GameContext ctx_{};
};

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

enum class EvalMode { Sampled, Exact };

std::string to_string(EvalMode mode);
EvalMode parse_eval_mode(const std::string& text);

struct GameSettings {
  EvalMode mode = EvalMode::Sampled;
  std::optional<Key> key;
  std::optional<Word> challenge_randomness;
};

struct Transcript {
  Key key = 0;
  int queries = 0;
  std::vector<Word> query_randomness;
  Word challenge_randomness = 0;
};

// In exact mode both values of b are evaluated on identical classical
// randomness; b and guess are then -1 and win_probability is
// (P[guess = 0 | b = 0] + P[guess = 1 | b = 1]) / 2.
struct GameOutcome {
  int b = -1;
  int guess = -1;
  bool win = false;
  double win_probability = 0.0;
  Transcript transcript;
};

GameOutcome run_game(GameVariant variant, const SchemePtr& scheme, const AdversaryFactory& factory,
                     Rng& rng, const GameSettings& settings = {});

GameOutcome run_ind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                         const GameSettings& settings = {});
GameOutcome run_fqind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                           const GameSettings& settings = {});
GameOutcome run_qind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                          const GameSettings& settings = {});
GameOutcome run_gqind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                           const GameSettings& settings = {});

// The challenger's qIND response for challenge bit b at fixed key and r:
// description b built, extended with zero ancillas, type-2 oracle applied.
QuantumSystem qind_challenge_state(const SchemePtr& scheme, Key key, Word r,
                                   const StateDescription& description);

}  // namespace qindlab::games
