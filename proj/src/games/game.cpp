#include "qindlab/games/game.hpp"

#include <algorithm>
#include <string>

#include "qindlab/common/error.hpp"
#include "qindlab/oracles/encryption_unitary.hpp"

namespace qindlab::games {

using quantum::wire_range;

std::string to_string(GameVariant v) {
  switch (v) {
    case GameVariant::IndQcpa: return "ind";
    case GameVariant::FqindQcpa: return "fqind";
    case GameVariant::QindQcpa: return "qind";
    case GameVariant::GqindQcpa: return "gqind";
  }
  return "?";
}

GameVariant parse_game_variant(const std::string& text) {
  if (text == "ind" || text == "ind-qcpa") return GameVariant::IndQcpa;
  if (text == "fqind" || text == "fqind-qcpa") return GameVariant::FqindQcpa;
  if (text == "qind" || text == "qind-qcpa") return GameVariant::QindQcpa;
  if (text == "gqind" || text == "gqind-qcpa") return GameVariant::GqindQcpa;
  throw InvalidArgument("unknown game variant '" + text + "'");
}

bool uses_type2_access(GameVariant v) {
  return v == GameVariant::QindQcpa || v == GameVariant::GqindQcpa;
}

std::string to_string(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "sampled"; }

EvalMode parse_eval_mode(const std::string& text) {
  if (text == "exact") return EvalMode::Exact;
  if (text == "sampled") return EvalMode::Sampled;
  throw InvalidArgument("unknown mode '" + text + "'");
}

namespace {

void check_register(const Wires& wires, int expected, const char* what) {
  if (static_cast<int>(wires.size()) != expected) {
    throw InvalidArgument(std::string(what) + " register must have " + std::to_string(expected) +
                          " wires, got " + std::to_string(wires.size()));
  }
}

Wires concat_wires(std::initializer_list<const Wires*> parts) {
  Wires out;
  for (const Wires* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

class Challenger {
 public:
  Challenger(GameVariant variant, SchemePtr scheme, Key key)
      : variant_(variant), scheme_(std::move(scheme)), key_(key) {}

  QueryResponse answer(QueryRequest request, Word r) {
    const int m = scheme_->message_bits();
    const int l = scheme_->ciphertext_bits();
    const int p = request.private_wires;
    QuantumSystem system = std::move(request.system);
    if (p < 0) throw InvalidArgument("negative private wire count");
    if (uses_type2_access(variant_)) {
      if (system.num_wires() != p + m) {
        throw InvalidArgument("type-2 query register must hold private wires plus m plaintext wires");
      }
      system.append_zero_wires(l - m);
      system.apply(oracles::type2_unitary(scheme_, key_, r).permutation, wire_range(p, l));
    } else {
      if (system.num_wires() != p + m + l) {
        throw InvalidArgument("type-1 query register must hold private wires plus m + l wires");
      }
      system.apply(oracles::type1_unitary(scheme_, key_, r).permutation, wire_range(p, m + l));
    }
    return {std::move(system), p};
  }

  ChallengeResponse challenge(ChallengeTemplate tmpl, int b, Word r) const {
    switch (variant_) {
      case GameVariant::IndQcpa: return classical(std::move(tmpl), b, r);
      case GameVariant::FqindQcpa: return fully_quantum(std::move(tmpl), b, r);
      case GameVariant::QindQcpa: return descriptions(std::move(tmpl), b, r);
      case GameVariant::GqindQcpa: return general(std::move(tmpl), b, r);
    }
    throw InvalidArgument("unknown game variant");
  }

 private:
  ChallengeResponse classical(ChallengeTemplate tmpl, int b, Word r) const {
    auto* c = std::get_if<ClassicalChallenge>(&tmpl);
    if (c == nullptr) throw InvalidArgument("IND-qCPA expects two classical messages");
    const Word mask = low_mask(scheme_->message_bits());
    if (c->x0 > mask || c->x1 > mask) throw InvalidArgument("challenge message wider than m bits");
    ChallengeResponse out;
    out.ciphertext = scheme_->enc(key_, r, b == 0 ? c->x0 : c->x1);
    return out;
  }

  // |x0, x1, y> -> |x0, x1, y xor Enc(x_b)>; every register is relayed back.
  ChallengeResponse fully_quantum(ChallengeTemplate tmpl, int b, Word r) const {
    auto* c = std::get_if<RegisterChallenge>(&tmpl);
    if (c == nullptr) throw InvalidArgument("fqIND expects designated registers");
    const int m = scheme_->message_bits();
    const int l = scheme_->ciphertext_bits();
    check_register(c->first, m, "first message");
    check_register(c->second, m, "second message");
    check_register(c->output, l, "output");
    quantum::check_wires(concat_wires({&c->first, &c->second, &c->output}), c->state.num_wires());
    const Wires& chosen = b == 0 ? c->first : c->second;
    QuantumSystem state = std::move(c->state);
    state.apply(oracles::type1_unitary(scheme_, key_, r).permutation, concat_wires({&chosen, &c->output}));
    ChallengeResponse out;
    out.private_wires = state.num_wires();
    out.ciphertext_wires = c->output;
    out.system = std::move(state);
    return out;
  }

  ChallengeResponse descriptions(ChallengeTemplate tmpl, int b, Word r) const {
    auto* c = std::get_if<DescriptionChallenge>(&tmpl);
    if (c == nullptr) throw InvalidArgument("qIND expects two state descriptions");
    if (c->first.num_wires() != c->second.num_wires()) {
      throw InvalidArgument("challenge descriptions have unequal wire counts");
    }
    if (c->first.num_wires() != scheme_->message_bits()) {
      throw InvalidArgument("challenge descriptions must have m wires");
    }
    ChallengeResponse out;
    out.system = qind_challenge_state(scheme_, key_, r, b == 0 ? c->first : c->second);
    out.ciphertext_wires = wire_range(0, scheme_->ciphertext_bits());
    return out;
  }

  ChallengeResponse general(ChallengeTemplate tmpl, int b, Word r) const {
    auto* c = std::get_if<RegisterChallenge>(&tmpl);
    if (c == nullptr) throw InvalidArgument("gqIND expects designated registers");
    const int m = scheme_->message_bits();
    const int l = scheme_->ciphertext_bits();
    check_register(c->first, m, "first message");
    check_register(c->second, m, "second message");
    QuantumSystem state = std::move(c->state);
    const int n = state.num_wires();
    quantum::check_wires(concat_wires({&c->first, &c->second}), n);
    const Wires& chosen = b == 0 ? c->first : c->second;
    const Wires& dropped = b == 0 ? c->second : c->first;

    std::vector<int> new_index(static_cast<std::size_t>(n), -1);
    std::vector<bool> is_dropped(static_cast<std::size_t>(n), false);
    std::vector<bool> is_chosen(static_cast<std::size_t>(n), false);
    for (int w : dropped) is_dropped[static_cast<std::size_t>(w)] = true;
    for (int w : chosen) is_chosen[static_cast<std::size_t>(w)] = true;
    int next = 0;
    for (int w = 0; w < n; ++w) {
      if (!is_dropped[static_cast<std::size_t>(w)]) new_index[static_cast<std::size_t>(w)] = next++;
    }
    state.discard(dropped);

    Wires order;
    for (int w = 0; w < n; ++w) {
      if (!is_dropped[static_cast<std::size_t>(w)] && !is_chosen[static_cast<std::size_t>(w)]) {
        order.push_back(new_index[static_cast<std::size_t>(w)]);
      }
    }
    const int p = static_cast<int>(order.size());
    for (int w : chosen) order.push_back(new_index[static_cast<std::size_t>(w)]);
    state.reorder(order);
    state.append_zero_wires(l - m);
    state.apply(oracles::type2_unitary(scheme_, key_, r).permutation, wire_range(p, l));

    ChallengeResponse out;
    out.private_wires = p;
    out.ciphertext_wires = wire_range(p, l);
    out.system = std::move(state);
    return out;
  }

  GameVariant variant_;
  SchemePtr scheme_;
  Key key_;
};

// Plays one branch with challenge bit b; returns the adversary after it has
// received the challenge.
std::unique_ptr<Adversary> play(GameVariant variant, const SchemePtr& scheme,
                                const AdversaryFactory& factory, Key key, int b, Rng& challenger_rng,
                                Rng& adversary_rng, const GameSettings& settings, Transcript& transcript) {
  const int tau = scheme->randomness_bits();
  auto adversary = factory();
  if (!adversary) throw InvalidArgument("adversary factory returned nothing");
  adversary->begin({variant, scheme, scheme->message_bits(), tau, scheme->ciphertext_bits()});

  Challenger challenger(variant, scheme, key);
  transcript = Transcript{};
  transcript.key = key;
  while (auto request = adversary->next_query()) {
    const Word r = challenger_rng.bits(tau);
    transcript.query_randomness.push_back(r);
    ++transcript.queries;
    adversary->receive_query_response(challenger.answer(std::move(*request), r), adversary_rng);
  }
  const Word r_star =
      settings.challenge_randomness ? *settings.challenge_randomness : challenger_rng.bits(tau);
  if (r_star > low_mask(tau)) throw InvalidArgument("challenge randomness wider than tau bits");
  transcript.challenge_randomness = r_star;
  adversary->receive_challenge(challenger.challenge(adversary->produce_challenge(), b, r_star));
  return adversary;
}

}  // namespace

GameOutcome run_game(GameVariant variant, const SchemePtr& scheme, const AdversaryFactory& factory,
                     Rng& rng, const GameSettings& settings) {
  if (!scheme) throw InvalidArgument("missing scheme");
  Rng challenger_rng = rng.fork();
  Rng adversary_rng = rng.fork();
  const Key key = settings.key ? *settings.key : scheme->gen(challenger_rng);

  GameOutcome outcome;
  if (settings.mode == EvalMode::Sampled) {
    outcome.b = challenger_rng.bit();
    auto adversary = play(variant, scheme, factory, key, outcome.b, challenger_rng, adversary_rng,
                          settings, outcome.transcript);
    outcome.guess = adversary->final_guess(adversary_rng);
    if (outcome.guess != 0 && outcome.guess != 1) throw InvalidArgument("guess must be a bit");
    outcome.win = outcome.guess == outcome.b;
    outcome.win_probability = outcome.win ? 1.0 : 0.0;
    return outcome;
  }

  double p_one[2] = {0.0, 0.0};
  for (int b = 0; b < 2; ++b) {
    Rng c = challenger_rng;
    Rng a = adversary_rng;
    auto adversary = play(variant, scheme, factory, key, b, c, a, settings, outcome.transcript);
    p_one[b] = std::clamp(adversary->guess_one_probability(), 0.0, 1.0);
  }
  outcome.win_probability = 0.5 * ((1.0 - p_one[0]) + p_one[1]);
  outcome.win = outcome.win_probability >= 1.0;
  return outcome;
}

GameOutcome run_ind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                         const GameSettings& settings) {
  return run_game(GameVariant::IndQcpa, scheme, factory, rng, settings);
}

GameOutcome run_fqind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                           const GameSettings& settings) {
  return run_game(GameVariant::FqindQcpa, scheme, factory, rng, settings);
}

GameOutcome run_qind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                          const GameSettings& settings) {
  return run_game(GameVariant::QindQcpa, scheme, factory, rng, settings);
}

GameOutcome run_gqind_qcpa(const SchemePtr& scheme, const AdversaryFactory& factory, Rng& rng,
                           const GameSettings& settings) {
  return run_game(GameVariant::GqindQcpa, scheme, factory, rng, settings);
}

QuantumSystem qind_challenge_state(const SchemePtr& scheme, Key key, Word r,
                                   const StateDescription& description) {
  const int m = scheme->message_bits();
  const int l = scheme->ciphertext_bits();
  if (description.num_wires() != m) throw InvalidArgument("description must have m wires");
  QuantumSystem system(quantum::build_ensemble(description));
  system.append_zero_wires(l - m);
  system.apply(oracles::type2_unitary(scheme, key, r).permutation, wire_range(0, l));
  return system;
}

}  // namespace qindlab::games
