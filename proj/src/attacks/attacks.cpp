#include "qindlab/attacks/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qindlab/common/error.hpp"

namespace qindlab::attacks {

using games::Adversary;
using games::ChallengeResponse;
using games::ChallengeTemplate;
using games::ClassicalChallenge;
using games::DescriptionChallenge;
using games::GameContext;
using games::QueryRequest;
using games::QueryResponse;
using games::RegisterChallenge;
using quantum::QuantumSystem;
using quantum::StateVector;
using quantum::Vector;
using quantum::Wires;
using quantum::wire_range;

namespace {

void require_game(const GameContext& ctx, std::initializer_list<GameVariant> allowed, const char* who) {
  if (std::find(allowed.begin(), allowed.end(), ctx.variant) == allowed.end()) {
    throw NotApplicable(std::string(who) + " does not play " + games::to_string(ctx.variant));
  }
}

void require_message_bits(const GameContext& ctx, int m, const char* who) {
  if (ctx.message_bits != m) {
    throw NotApplicable(std::string(who) + " built for m = " + std::to_string(m) +
                        " but the scheme has m = " + std::to_string(ctx.message_bits));
  }
}

// Probability that measuring `wires` of `system` gives all zeros.
double zero_probability(const QuantumSystem& system, const Wires& wires) {
  return system.probability(wires, 0);
}

// Shared by the attacks whose guess is "1 iff some wire in the test set
// reads 1 after Hadamards".
class HadamardTestAdversary : public Adversary {
 public:
  double guess_one_probability() const override { return 1.0 - zero_probability(*system_, test_wires_); }

  int final_guess(Rng& rng) override { return system_->measure(test_wires_, rng) == 0 ? 0 : 1; }

 protected:
  void set_result(QuantumSystem system, Wires hadamard_wires) {
    system.apply(quantum::hadamard_all(static_cast<int>(hadamard_wires.size())), hadamard_wires);
    system_ = std::move(system);
    test_wires_ = std::move(hadamard_wires);
  }

 private:
  std::optional<QuantumSystem> system_;
  Wires test_wires_;
};

class BzAdversary final : public Adversary {
 public:
  explicit BzAdversary(int m) : m_(m) {}

  void begin(const GameContext& ctx) override {
    require_game(ctx, {GameVariant::FqindQcpa}, "bz");
    require_message_bits(ctx, m_, "bz");
    Adversary::begin(ctx);
  }

  ChallengeTemplate produce_challenge() override {
    const int l = context().ciphertext_bits;
    const int n = 2 * m_ + l;
    // |0^m> (x) H|0^m> (x) |0^l>
    StateVector s = StateVector::zero(n);
    s = quantum::apply_unitary(quantum::hadamard_all(m_), s, wire_range(m_, m_));
    return RegisterChallenge{QuantumSystem(std::move(s)), wire_range(0, m_), wire_range(m_, m_),
                             wire_range(2 * m_, l)};
  }

  void receive_challenge(ChallengeResponse response) override {
    system_ = std::move(response.system);
    output_ = std::move(response.ciphertext_wires);
  }

  double guess_one_probability() const override {
    QuantumSystem s = *system_;
    s.discard(output_);
    s.apply(quantum::hadamard_all(m_), wire_range(m_, m_));
    return 1.0 - zero_probability(s, wire_range(m_, m_));
  }

  int final_guess(Rng& rng) override {
    QuantumSystem s = *system_;
    s.measure(output_, rng);
    s.discard(output_);
    s.apply(quantum::hadamard_all(m_), wire_range(m_, m_));
    return s.measure(wire_range(m_, m_), rng) == 0 ? 0 : 1;
  }

 private:
  int m_;
  std::optional<QuantumSystem> system_;
  Wires output_;
};

class QlpAdversary final : public HadamardTestAdversary {
 public:
  QlpAdversary(int m, bool forced, bool single_bit) : m_(m), forced_(forced), single_bit_(single_bit) {}

  void begin(const GameContext& ctx) override {
    const char* who = single_bit_ ? "hadamard-bit" : "qlp";
    require_game(ctx, {GameVariant::QindQcpa, GameVariant::GqindQcpa}, who);
    if (single_bit_ && ctx.message_bits != 1) {
      throw NotApplicable("hadamard-bit requires single-bit messages");
    }
    require_message_bits(ctx, m_, who);
    if (!forced_ && !single_bit_) {
      bool qlp = false;
      try {
        qlp = schemes::is_quasi_length_preserving(ctx.scheme);
      } catch (const NoCoreDecomposition& e) {
        throw NotApplicable(std::string("qlp refuses scheme: ") + e.what());
      }
      if (!qlp) throw NotApplicable("qlp refuses scheme " + ctx.scheme->name() + ": core longer than m");
    }
    HadamardTestAdversary::begin(ctx);
  }

  ChallengeTemplate produce_challenge() override {
    auto first = quantum::uniform_superposition(m_);
    auto second = quantum::hadamard_of_ones(m_);
    if (context().variant == GameVariant::QindQcpa) {
      return DescriptionChallenge{std::move(first), std::move(second)};
    }
    StateVector s = quantum::prepare_pure(first).tensor(quantum::prepare_pure(second));
    return RegisterChallenge{QuantumSystem(std::move(s)), wire_range(0, m_), wire_range(m_, m_), {}};
  }

  void receive_challenge(ChallengeResponse response) override {
    const auto& c = response.ciphertext_wires;
    Wires core(c.end() - m_, c.end());
    set_result(std::move(*response.system), std::move(core));
  }

 private:
  int m_;
  bool forced_;
  bool single_bit_;
};

class LiftedHadamardBitAdversary final : public HadamardTestAdversary {
 public:
  explicit LiftedHadamardBitAdversary(int m) : m_(m) {}

  void begin(const GameContext& ctx) override {
    require_game(ctx, {GameVariant::QindQcpa, GameVariant::GqindQcpa}, "hadamard-bit-lifted");
    require_message_bits(ctx, m_, "hadamard-bit-lifted");
    HadamardTestAdversary::begin(ctx);
  }

  ChallengeTemplate produce_challenge() override {
    quantum::StateDescription plus(m_, {quantum::Gate::h(0)});
    quantum::StateDescription minus(m_, {quantum::Gate::x(0), quantum::Gate::h(0)});
    if (context().variant == GameVariant::QindQcpa) {
      return DescriptionChallenge{std::move(plus), std::move(minus)};
    }
    StateVector s = quantum::prepare_pure(plus).tensor(quantum::prepare_pure(minus));
    return RegisterChallenge{QuantumSystem(std::move(s)), wire_range(0, m_), wire_range(m_, m_), {}};
  }

  void receive_challenge(ChallengeResponse response) override {
    const auto& c = response.ciphertext_wires;
    const int first_core = c[c.size() - static_cast<std::size_t>(m_)];
    set_result(std::move(*response.system), {first_core});
  }

 private:
  int m_;
};

// Submits a fixed well-formed challenge for any game and ignores the answer.
class BlindAdversary final : public Adversary {
 public:
  BlindAdversary(int m, std::optional<int> constant) : m_(m), constant_(constant) {}

  void begin(const GameContext& ctx) override {
    require_message_bits(ctx, m_, "guesser");
    Adversary::begin(ctx);
  }

  ChallengeTemplate produce_challenge() override {
    const int l = context().ciphertext_bits;
    switch (context().variant) {
      case GameVariant::IndQcpa:
        return ClassicalChallenge{0, low_mask(m_)};
      case GameVariant::FqindQcpa:
        return RegisterChallenge{QuantumSystem(StateVector::zero(2 * m_ + l)), wire_range(0, m_),
                                 wire_range(m_, m_), wire_range(2 * m_, l)};
      case GameVariant::QindQcpa: {
        std::vector<quantum::Gate> ones;
        for (int w = 0; w < m_; ++w) ones.push_back(quantum::Gate::x(w));
        return DescriptionChallenge{quantum::StateDescription(m_, std::vector<quantum::Gate>{}),
                                    quantum::StateDescription(m_, std::move(ones))};
      }
      case GameVariant::GqindQcpa:
        return RegisterChallenge{QuantumSystem(StateVector::zero(2 * m_)), wire_range(0, m_),
                                 wire_range(m_, m_), {}};
    }
    throw InvalidArgument("unknown game variant");
  }

  void receive_challenge(ChallengeResponse) override {}

  double guess_one_probability() const override {
    return constant_ ? static_cast<double>(*constant_) : 0.5;
  }

  int final_guess(Rng& rng) override { return constant_ ? *constant_ : rng.bit(); }

 private:
  int m_;
  std::optional<int> constant_;
};

class PlaintextEchoAdversary final : public Adversary {
 public:
  explicit PlaintextEchoAdversary(int m) : m_(m) {}

  void begin(const GameContext& ctx) override {
    require_game(ctx, {GameVariant::IndQcpa}, "echo");
    require_message_bits(ctx, m_, "echo");
    Adversary::begin(ctx);
  }

  ChallengeTemplate produce_challenge() override { return ClassicalChallenge{0, low_mask(m_)}; }

  void receive_challenge(ChallengeResponse response) override {
    guess_ = (*response.ciphertext & low_mask(m_)) == low_mask(m_) ? 1 : 0;
  }

  double guess_one_probability() const override { return guess_; }
  int final_guess(Rng&) override { return guess_; }

 private:
  int m_;
  int guess_ = 0;
};

class EntangledBlockAdversary final : public HadamardTestAdversary {
 public:
  EntangledBlockAdversary(int m, int mu) : m_(m), mu_(mu) {}

  void begin(const GameContext& ctx) override {
    require_game(ctx, {GameVariant::GqindQcpa}, "entangled-block");
    require_message_bits(ctx, m_ * mu_, "entangled-block");
    if (ctx.scheme->block_count() != mu_) {
      throw NotApplicable("entangled-block expects a " + std::to_string(mu_) + "-block scheme");
    }
    HadamardTestAdversary::begin(ctx);
  }

  ChallengeTemplate produce_challenge() override {
    const int width = m_ * mu_;
    // (|0>|0^w> + |1>|1^w>)/sqrt(2) on wires [0, 1 + w), then H|0^w>.
    Vector ghz = Vector::Zero(static_cast<Eigen::Index>(dimension_of(1 + width)));
    ghz[0] = 1.0 / std::sqrt(2.0);
    ghz[static_cast<Eigen::Index>(low_mask(1 + width))] = 1.0 / std::sqrt(2.0);
    StateVector s = StateVector(1 + width, std::move(ghz)).tensor(StateVector::zero(width));
    s = quantum::apply_unitary(quantum::hadamard_all(width), s, wire_range(1 + width, width));
    return RegisterChallenge{QuantumSystem(std::move(s)), wire_range(1, width), wire_range(1 + width, width), {}};
  }

  void receive_challenge(ChallengeResponse response) override {
    const int block_l = context().ciphertext_bits / mu_;
    Wires tested(static_cast<std::size_t>(response.private_wires));
    for (int w = 0; w < response.private_wires; ++w) tested[static_cast<std::size_t>(w)] = w;
    const auto& c = response.ciphertext_wires;
    for (int i = 0; i < mu_; ++i) {
      for (int j = block_l - m_; j < block_l; ++j) tested.push_back(c[static_cast<std::size_t>(i * block_l + j)]);
    }
    set_result(std::move(*response.system), std::move(tested));
  }

 private:
  int m_;
  int mu_;
};

class QueryingAdversary final : public Adversary {
 public:
  QueryingAdversary(std::unique_ptr<Adversary> inner, int queries)
      : inner_(std::move(inner)), queries_(queries) {}

  void begin(const GameContext& ctx) override {
    Adversary::begin(ctx);
    inner_->begin(ctx);
  }

  std::optional<QueryRequest> next_query() override {
    if (issued_ >= queries_) return inner_->next_query();
    ++issued_;
    const int m = context().message_bits;
    const int width = games::uses_type2_access(context().variant) ? m : m + context().ciphertext_bits;
    StateVector s = StateVector::zero(width);
    s = quantum::apply_unitary(quantum::hadamard_all(m), s, wire_range(0, m));
    return QueryRequest{QuantumSystem(std::move(s)), 0};
  }

  void receive_query_response(QueryResponse response, Rng& rng) override {
    if (answered_ >= queries_) {
      inner_->receive_query_response(std::move(response), rng);
      return;
    }
    ++answered_;
    response.system.measure(wire_range(0, response.system.num_wires()), rng);
  }

  ChallengeTemplate produce_challenge() override { return inner_->produce_challenge(); }
  void receive_challenge(ChallengeResponse response) override { inner_->receive_challenge(std::move(response)); }
  double guess_one_probability() const override { return inner_->guess_one_probability(); }
  int final_guess(Rng& rng) override { return inner_->final_guess(rng); }

 private:
  std::unique_ptr<Adversary> inner_;
  int queries_;
  int issued_ = 0;
  int answered_ = 0;
};

// Purification sum_i sqrt(p_i) |i>|psi_i> with the index register leading.
std::pair<StateVector, int> materialize(const quantum::StateDescription& desc) {
  const auto ensemble = quantum::build_ensemble(desc);
  if (ensemble.size() == 1) return {ensemble.front().state, 0};
  int k = 0;
  while (dimension_of(k) < ensemble.size()) ++k;
  const int m = desc.num_wires();
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dimension_of(k + m)));
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const double scale = std::sqrt(ensemble[i].weight);
    for (Word x = 0; x < dimension_of(m); ++x) {
      amps[static_cast<Eigen::Index>(concat(i, x, m))] = scale * ensemble[i].state.amplitude(x);
    }
  }
  return {StateVector(k + m, std::move(amps)), k};
}

class GqindReplayAdversary final : public Adversary {
 public:
  explicit GqindReplayAdversary(std::unique_ptr<Adversary> inner) : inner_(std::move(inner)) {}

  void begin(const GameContext& ctx) override {
    require_game(ctx, {GameVariant::GqindQcpa}, "gqind replay");
    Adversary::begin(ctx);
    GameContext inner_ctx = ctx;
    inner_ctx.variant = GameVariant::QindQcpa;
    inner_->begin(inner_ctx);
  }

  std::optional<QueryRequest> next_query() override { return inner_->next_query(); }
  void receive_query_response(QueryResponse response, Rng& rng) override {
    inner_->receive_query_response(std::move(response), rng);
  }

  ChallengeTemplate produce_challenge() override {
    auto tmpl = inner_->produce_challenge();
    auto* d = std::get_if<DescriptionChallenge>(&tmpl);
    if (d == nullptr) throw InvalidArgument("gqind replay needs a qIND adversary");
    auto [s0, k0] = materialize(d->first);
    auto [s1, k1] = materialize(d->second);
    const int m = d->first.num_wires();
    StateVector joint = s0.tensor(s1);
    return RegisterChallenge{QuantumSystem(std::move(joint)), wire_range(k0, m), wire_range(k0 + m + k1, m), {}};
  }

  void receive_challenge(ChallengeResponse response) override {
    QuantumSystem system = std::move(*response.system);
    system.discard(wire_range(0, response.private_wires));
    ChallengeResponse inner_response;
    inner_response.ciphertext_wires = wire_range(0, system.num_wires());
    inner_response.system = std::move(system);
    inner_->receive_challenge(std::move(inner_response));
  }

  double guess_one_probability() const override { return inner_->guess_one_probability(); }
  int final_guess(Rng& rng) override { return inner_->final_guess(rng); }

 private:
  std::unique_ptr<Adversary> inner_;
};

}  // namespace

bool AttackSpec::supports(GameVariant v) const {
  return std::find(games.begin(), games.end(), v) != games.end();
}

AdversaryFactory bz_adversary(int m) {
  if (m < 1) throw InvalidArgument("bz needs m >= 1");
  return [m] { return std::make_unique<BzAdversary>(m); };
}

AttackSpec bz_attack(int m) {
  const long long denom = 1LL << (m + 1);
  return {"bz", {GameVariant::FqindQcpa}, m, Rational{denom - 1, denom}, bz_adversary(m)};
}

AdversaryFactory qlp_distinguisher(int m, bool forced) {
  if (m < 1) throw InvalidArgument("qlp needs m >= 1");
  return [m, forced] { return std::make_unique<QlpAdversary>(m, forced, false); };
}

AttackSpec qlp_attack(int m, bool forced) {
  return {"qlp", {GameVariant::QindQcpa, GameVariant::GqindQcpa}, m, Rational{1, 1}, qlp_distinguisher(m, forced)};
}

AdversaryFactory hadamard_bit_distinguisher() {
  return [] { return std::make_unique<QlpAdversary>(1, false, true); };
}

AttackSpec hadamard_bit_attack() {
  return {"hadamard-bit", {GameVariant::QindQcpa, GameVariant::GqindQcpa}, 1, Rational{1, 1},
          hadamard_bit_distinguisher()};
}

AdversaryFactory lifted_hadamard_bit_distinguisher(int m) {
  if (m < 1) throw InvalidArgument("hadamard-bit-lifted needs m >= 1");
  return [m] { return std::make_unique<LiftedHadamardBitAdversary>(m); };
}

AdversaryFactory random_guesser(int m) {
  return [m] { return std::make_unique<BlindAdversary>(m, std::nullopt); };
}

AdversaryFactory constant_guesser(int m, int bit) {
  if (bit != 0 && bit != 1) throw InvalidArgument("constant guess must be a bit");
  return [m, bit] { return std::make_unique<BlindAdversary>(m, bit); };
}

AdversaryFactory plaintext_echo_distinguisher(int m) {
  return [m] { return std::make_unique<PlaintextEchoAdversary>(m); };
}

AdversaryFactory entangled_block_adversary(int m, int mu) {
  if (m < 1 || mu < 1) throw InvalidArgument("entangled-block needs m, mu >= 1");
  return [m, mu] { return std::make_unique<EntangledBlockAdversary>(m, mu); };
}

AdversaryFactory with_learning_queries(AdversaryFactory inner, int queries) {
  if (queries < 0) throw InvalidArgument("negative query count");
  if (queries == 0) return inner;
  return [inner = std::move(inner), queries] {
    return std::make_unique<QueryingAdversary>(inner(), queries);
  };
}

AdversaryFactory as_gqind(AdversaryFactory qind_adversary) {
  return [inner = std::move(qind_adversary)] { return std::make_unique<GqindReplayAdversary>(inner()); };
}

AttackSpec find_attack(const std::string& name, int m, int mu, bool forced) {
  const std::vector<GameVariant> all = {GameVariant::IndQcpa, GameVariant::FqindQcpa,
                                        GameVariant::QindQcpa, GameVariant::GqindQcpa};
  if (name == "bz") return bz_attack(m);
  if (name == "qlp") return qlp_attack(m, forced);
  if (name == "hadamard-bit") {
    if (m != 1) throw NotApplicable("hadamard-bit requires single-bit messages");
    return hadamard_bit_attack();
  }
  if (name == "hadamard-bit-lifted") {
    return {name, {GameVariant::QindQcpa, GameVariant::GqindQcpa}, m, std::nullopt,
            lifted_hadamard_bit_distinguisher(m)};
  }
  if (name == "random") return {name, all, m, Rational{1, 2}, random_guesser(m)};
  if (name == "echo") return {name, {GameVariant::IndQcpa}, m, std::nullopt, plaintext_echo_distinguisher(m)};
  if (name == "entangled-block") {
    if (mu < 2) throw NotApplicable("entangled-block needs at least two blocks");
    return {name, {GameVariant::GqindQcpa}, m, std::nullopt, entangled_block_adversary(m, mu)};
  }
  throw InvalidArgument("unknown attack '" + name + "'");
}

}  // namespace qindlab::attacks
