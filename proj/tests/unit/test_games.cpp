#include <cmath>

#include <gtest/gtest.h>

#include "qindlab/attacks/attacks.hpp"
#include "qindlab/common/error.hpp"
#include "qindlab/games/advantage.hpp"
#include "qindlab/oracles/encryption_unitary.hpp"
#include "support/reference.hpp"

namespace qindlab::games {
namespace {

using quantum::Gate;
using quantum::StateVector;

// Submits a fixed template, optionally issues queries first, and records what
// comes back.
struct Record {
  std::vector<QueryResponse> queries;
  std::optional<ChallengeResponse> challenge;
};

class SpyAdversary final : public Adversary {
 public:
  SpyAdversary(std::function<ChallengeTemplate(const GameContext&)> make, std::vector<QueryRequest> queries,
               std::shared_ptr<Record> record)
      : make_(std::move(make)), pending_(std::move(queries)), record_(std::move(record)) {}

  std::optional<QueryRequest> next_query() override {
    if (pending_.empty()) return std::nullopt;
    QueryRequest q = std::move(pending_.front());
    pending_.erase(pending_.begin());
    return q;
  }
  void receive_query_response(QueryResponse r, Rng&) override { record_->queries.push_back(std::move(r)); }
  ChallengeTemplate produce_challenge() override { return make_(context()); }
  void receive_challenge(ChallengeResponse response) override { record_->challenge = std::move(response); }
  double guess_one_probability() const override { return 0.5; }
  int final_guess(Rng& rng) override { return rng.bit(); }

 private:
  std::function<ChallengeTemplate(const GameContext&)> make_;
  std::vector<QueryRequest> pending_;
  std::shared_ptr<Record> record_;
};

AdversaryFactory spy(std::function<ChallengeTemplate(const GameContext&)> make, std::shared_ptr<Record> record,
                     std::function<std::vector<QueryRequest>()> queries = {}) {
  return [=] {
    return std::make_unique<SpyAdversary>(make, queries ? queries() : std::vector<QueryRequest>{}, record);
  };
}

SchemePtr prf22() { return schemes::prf_scheme(2, 2, schemes::feistel_prf(2, 2)); }
SchemePtr prp22() { return schemes::prp_scheme(2, 2, schemes::ideal_prp_family(4)); }

GameSettings exact_at(Key k, Word r) {
  GameSettings s;
  s.mode = EvalMode::Exact;
  s.key = k;
  s.challenge_randomness = r;
  return s;
}

TEST(Parsing, VariantsAndModes) {
  EXPECT_EQ(parse_game_variant("ind"), GameVariant::IndQcpa);
  EXPECT_EQ(parse_game_variant("fqind"), GameVariant::FqindQcpa);
  EXPECT_EQ(parse_game_variant("qind"), GameVariant::QindQcpa);
  EXPECT_EQ(parse_game_variant("gqind"), GameVariant::GqindQcpa);
  EXPECT_THROW(parse_game_variant("qind2"), InvalidArgument);
  EXPECT_EQ(parse_eval_mode("exact"), EvalMode::Exact);
  EXPECT_EQ(parse_eval_mode("sampled"), EvalMode::Sampled);
  EXPECT_THROW(parse_eval_mode("fast"), InvalidArgument);
  for (auto v : {GameVariant::IndQcpa, GameVariant::FqindQcpa, GameVariant::QindQcpa, GameVariant::GqindQcpa}) {
    EXPECT_EQ(parse_game_variant(to_string(v)), v);
  }
  EXPECT_FALSE(uses_type2_access(GameVariant::IndQcpa));
  EXPECT_FALSE(uses_type2_access(GameVariant::FqindQcpa));
  EXPECT_TRUE(uses_type2_access(GameVariant::QindQcpa));
  EXPECT_TRUE(uses_type2_access(GameVariant::GqindQcpa));
}

TEST(IndQcpa, ConstantGuesserWinsHalf) {
  Rng rng(1);
  for (int bit : {0, 1}) {
    const auto out = run_ind_qcpa(prf22(), attacks::constant_guesser(2, bit), rng, exact_at(5, 1));
    EXPECT_DOUBLE_EQ(out.win_probability, 0.5);
  }
}

TEST(IndQcpa, EchoBreaksZeroPrf) {
  const auto s = schemes::prf_scheme(2, 2, schemes::zero_prf(2, 2));
  Rng rng(2);
  for (Word r = 0; r < 4; ++r) {
    EXPECT_DOUBLE_EQ(run_ind_qcpa(s, attacks::plaintext_echo_distinguisher(2), rng, exact_at(0, r)).win_probability, 1.0);
  }
  EstimateOptions opt;
  opt.trials = 200;
  opt.seed = 3;
  const auto est = estimate_advantage(GameVariant::IndQcpa, s, attacks::plaintext_echo_distinguisher(2), opt);
  EXPECT_EQ(est.wins, 200.0);
  EXPECT_DOUBLE_EQ(est.advantage, 1.0);
  EXPECT_DOUBLE_EQ(est.ci_high, 1.0);
  EXPECT_NEAR(est.ci_low, 1.0 - hoeffding_half_width(200), 1e-15);
  EXPECT_GT(est.half_width, 0.0);
  EXPECT_DOUBLE_EQ(est.wilson_high, 1.0);
}

TEST(IndQcpa, RandomGuesserHasNoAdvantage) {
  EstimateOptions opt;
  opt.trials = 10000;
  opt.seed = 4;
  const auto est = estimate_advantage(GameVariant::IndQcpa, prp22(), attacks::random_guesser(2), opt);
  EXPECT_LE(std::abs(est.advantage), est.advantage_half_width);
  EXPECT_LE(std::abs(est.advantage), 0.035);
}

TEST(Advantage, HoeffdingWidth) {
  EXPECT_NEAR(hoeffding_half_width(10000), std::sqrt(std::log(200.0) / 20000.0), 1e-15);
  EXPECT_NEAR(hoeffding_half_width(1), std::sqrt(std::log(200.0) / 2.0), 1e-15);
  EXPECT_THROW(hoeffding_half_width(0), InvalidArgument);
  EstimateOptions opt;
  opt.trials = 0;
  EXPECT_THROW(estimate_advantage(GameVariant::IndQcpa, prf22(), attacks::random_guesser(2), opt), InvalidArgument);
}

TEST(Advantage, WilsonIntervalContainsRate) {
  EstimateOptions opt;
  opt.trials = 500;
  opt.seed = 5;
  const auto est = estimate_advantage(GameVariant::IndQcpa, prf22(), attacks::random_guesser(2), opt);
  EXPECT_LE(est.wilson_low, est.win_rate);
  EXPECT_GE(est.wilson_high, est.win_rate);
  const double z = 2.5758293035489004;
  const double n = 500.0;
  const double p = est.win_rate;
  const double centre = (p + z * z / (2 * n)) / (1 + z * z / n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / (1 + z * z / n);
  EXPECT_NEAR(est.wilson_low, centre - spread, 1e-6);
  EXPECT_NEAR(est.wilson_high, centre + spread, 1e-6);
}

TEST(Advantage, SeedDeterminesResultWhateverTheJobs) {
  EstimateOptions opt;
  opt.trials = 300;
  opt.seed = 6;
  const auto factory = attacks::bz_adversary(2);
  const auto s = prf22();
  const auto a = estimate_advantage(GameVariant::FqindQcpa, s, factory, opt);
  opt.jobs = 3;
  const auto b = estimate_advantage(GameVariant::FqindQcpa, s, factory, opt);
  EXPECT_EQ(a.wins, b.wins);
  opt.seed = 7;
  opt.mode = EvalMode::Exact;
  const auto c = estimate_advantage(GameVariant::FqindQcpa, s, factory, opt);
  opt.jobs = 1;
  const auto d = estimate_advantage(GameVariant::FqindQcpa, s, factory, opt);
  EXPECT_EQ(c.wins, d.wins);
}

// Independent computation of the m = 1 entanglement attack: dense vectors and
// explicit partial traces over the four-wire register |x0, x1, y>.
double reference_bz_win(const SchemePtr& s, Key k, Word r) {
  double guess_one[2];
  for (int b = 0; b < 2; ++b) {
    ref::Vec psi = ref::kron(ref::basis(1, 0), ref::h1() * ref::basis(1, 0));
    psi = ref::kron(psi, ref::basis(2, 0));
    // Type-1 oracle on (x_b, y).
    const int xw = b == 0 ? 3 : 2;
    const ref::Mat u = ref::permutation(4, [&](std::uint64_t i) {
      const Word x = (i >> xw) & 1U;
      return i ^ s->enc(k, r, x);
    });
    psi = u * psi;
    ref::Mat rho = ref::trace_last(ref::projector(psi), 4, 2);
    const ref::Mat h = ref::on_wire(ref::h1(), 1, 2);
    rho = h * rho * h.adjoint();
    guess_one[b] = std::real(rho(1, 1) + rho(3, 3));
  }
  return 0.5 * ((1.0 - guess_one[0]) + guess_one[1]);
}

TEST(FqindQcpa, EntanglementAttackMatchesIndependentOracle) {
  for (const auto& s : {schemes::prf_scheme(1, 1, schemes::feistel_prf(1, 1)),
                        schemes::prp_scheme(1, 1, schemes::ideal_prp_family(2))}) {
    Rng keys(8);
    for (int i = 0; i < 6; ++i) {
      const Key k = s->gen(keys);
      for (Word r = 0; r < 2; ++r) {
        Rng rng(9);
        const auto out = run_fqind_qcpa(s, attacks::bz_adversary(1), rng, exact_at(k, r));
        const double expected = reference_bz_win(s, k, r);
        EXPECT_NEAR(out.win_probability, expected, 1e-12);
        EXPECT_NEAR(expected, 0.75, 1e-12);
      }
    }
  }
}

TEST(FqindQcpa, SampledEntanglementAttackWithinInterval) {
  const auto s = schemes::prf_scheme(3, 1, schemes::feistel_prf(1, 3));
  EstimateOptions opt;
  opt.trials = 4000;
  opt.seed = 10;
  const auto est = estimate_advantage(GameVariant::FqindQcpa, s, attacks::bz_adversary(3), opt);
  EXPECT_LE(std::abs(est.win_rate - 0.9375), est.half_width);
}

TEST(FqindQcpa, RelaysEveryRegister) {
  auto record = std::make_shared<Record>();
  const auto s = prf22();
  const auto make = [](const GameContext& ctx) -> ChallengeTemplate {
    const int m = ctx.message_bits;
    const int l = ctx.ciphertext_bits;
    // One private wire first, then x0, x1, y.
    QuantumSystem state(StateVector::zero(1 + 2 * m + l));
    return RegisterChallenge{std::move(state), quantum::wire_range(1, m), quantum::wire_range(1 + m, m),
                             quantum::wire_range(1 + 2 * m, l)};
  };
  Rng rng(11);
  run_fqind_qcpa(s, spy(make, record), rng, exact_at(3, 2));
  ASSERT_TRUE(record->challenge && record->challenge->system);
  EXPECT_EQ(record->challenge->system->num_wires(), 1 + 2 * 2 + 4);
  EXPECT_EQ(record->challenge->ciphertext_wires, quantum::wire_range(5, 4));
  // b = 1 in the second exact branch: the output register holds Enc(3, 2, 0).
  EXPECT_NEAR(record->challenge->system->probability(quantum::wire_range(5, 4), s->enc(3, 2, 0)), 1.0, 1e-12);
}

TEST(QindQcpa, ChallengeStateIsConjugatedInput) {
  const auto s = prp22();
  const quantum::StateDescription desc(2, std::vector<quantum::CircuitBranch>{
                                              {0.25, {Gate::h(0), Gate::x(1)}},
                                              {0.75, {Gate::h(0), Gate::cx(0, 1)}},
                                          });
  Rng keys(12);
  const Key k = s->gen(keys);
  for (Word r = 0; r < 4; ++r) {
    const auto sys = qind_challenge_state(s, k, r, desc);
    ref::Vec plus_one = ref::kron(ref::h1() * ref::basis(1, 0), ref::basis(1, 1));
    ref::Vec bell = ref::basis(2, 0);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const ref::Mat rho_x = 0.25 * ref::projector(plus_one) + 0.75 * ref::projector(bell);
    const ref::Mat rho_in = ref::kron(rho_x, ref::projector(ref::basis(2, 0)));
    const ref::Mat u =
        ref::permutation(4, [&](std::uint64_t i) { return s->type2_completion(k, r, i >> 2, i & 3U); });
    const ref::Mat expected = u * rho_in * u.adjoint();
    EXPECT_LT(ref::max_abs(sys.density_matrix().matrix() - expected), 1e-12);
  }
}

TEST(QindQcpa, QlpDistinguisherWinsAgainstPrf) {
  const auto s = prf22();
  Rng keys(13);
  for (int i = 0; i < 8; ++i) {
    const Key k = s->gen(keys);
    for (Word r = 0; r < 4; ++r) {
      Rng rng(14);
      EXPECT_NEAR(run_qind_qcpa(s, attacks::qlp_distinguisher(2), rng, exact_at(k, r)).win_probability, 1.0, 1e-12);
      EXPECT_NEAR(run_gqind_qcpa(s, attacks::qlp_distinguisher(2), rng, exact_at(k, r)).win_probability, 1.0, 1e-12);
    }
  }
}

TEST(QindQcpa, ReturnsOnlyCiphertextWires) {
  auto record = std::make_shared<Record>();
  const auto make = [](const GameContext& ctx) -> ChallengeTemplate {
    return DescriptionChallenge{quantum::uniform_superposition(ctx.message_bits),
                                quantum::hadamard_of_ones(ctx.message_bits)};
  };
  const auto queries = [] {
    std::vector<QueryRequest> q;
    q.push_back({QuantumSystem(StateVector::zero(1 + 2)), 1});
    return q;
  };
  Rng rng(15);
  run_qind_qcpa(prp22(), spy(make, record, queries), rng);
  ASSERT_EQ(record->queries.size(), 1u);
  EXPECT_EQ(record->queries[0].system.num_wires(), 1 + 4);
  EXPECT_EQ(record->queries[0].private_wires, 1);
  ASSERT_TRUE(record->challenge && record->challenge->system);
  EXPECT_EQ(record->challenge->system->num_wires(), 4);
  EXPECT_EQ(record->challenge->private_wires, 0);
}

TEST(GqindQcpa, DiscardsOtherRegisterAndOrdersPrivateWiresFirst) {
  auto record = std::make_shared<Record>();
  // Wires: x0 = {0, 1}, private = {2}, x1 = {3, 4}. The private wire is |1>
  // and x1 is |11>, so after the b = 1 branch the response is |1> ⊗ Enc(11).
  const auto make = [](const GameContext&) -> ChallengeTemplate {
    QuantumSystem state(quantum::state_from_bits("00111"));
    return RegisterChallenge{std::move(state), {0, 1}, {3, 4}, {}};
  };
  const auto s = prp22();
  Rng rng(16);
  run_gqind_qcpa(s, spy(make, record), rng, exact_at(9, 2));
  ASSERT_TRUE(record->challenge && record->challenge->system);
  const auto& sys = *record->challenge->system;
  EXPECT_EQ(sys.num_wires(), 1 + 4);
  EXPECT_EQ(record->challenge->private_wires, 1);
  EXPECT_EQ(record->challenge->ciphertext_wires, quantum::wire_range(1, 4));
  EXPECT_NEAR(sys.probability(quantum::wire_range(0, 5), concat(1, s->enc(9, 2, 3), 4)), 1.0, 1e-12);
}

TEST(GqindQcpa, TracingOutEntangledRegisterDecoheresPartner) {
  auto record = std::make_shared<Record>();
  // Bell pair across x0 wire 0 and x1 wire 0 (wires 0 and 2 of 4).
  const auto make = [](const GameContext&) -> ChallengeTemplate {
    QuantumSystem state(quantum::prepare_pure(quantum::StateDescription(4, {Gate::h(0), Gate::cx(0, 2)})));
    return RegisterChallenge{std::move(state), {0, 1}, {2, 3}, {}};
  };
  const auto s = schemes::prp_scheme(2, 2, schemes::identity_family(4));
  Rng rng(17);
  run_gqind_qcpa(s, spy(make, record), rng, exact_at(0, 0));
  ASSERT_TRUE(record->challenge && record->challenge->system);
  ref::Mat expected = ref::Mat::Zero(16, 16);
  expected(0, 0) = 0.5;
  expected(8, 8) = 0.5;
  EXPECT_LT(ref::max_abs(record->challenge->system->density_matrix().matrix() - expected), 1e-12);
}

TEST(GqindQcpa, ReplayedQindAdversaryBehavesIdentically) {
  const auto s = prf22();
  const auto factories = {attacks::qlp_distinguisher(2), attacks::lifted_hadamard_bit_distinguisher(2)};
  for (const auto& f : factories) {
    Rng keys(18);
    for (int i = 0; i < 4; ++i) {
      const Key k = s->gen(keys);
      for (Word r = 0; r < 4; ++r) {
        Rng a(19);
        Rng b(19);
        const double q = run_qind_qcpa(s, f, a, exact_at(k, r)).win_probability;
        const double g = run_gqind_qcpa(s, attacks::as_gqind(f), b, exact_at(k, r)).win_probability;
        EXPECT_NEAR(q, g, 1e-12);
      }
    }
  }
}

TEST(Games, SameSeedSameTranscript) {
  const auto s = prp22();
  const auto f = attacks::with_learning_queries(attacks::qlp_distinguisher(2, true), 3);
  Rng a(20);
  Rng b(20);
  const auto x = run_qind_qcpa(s, f, a);
  const auto y = run_qind_qcpa(s, f, b);
  EXPECT_EQ(x.b, y.b);
  EXPECT_EQ(x.guess, y.guess);
  EXPECT_EQ(x.transcript.key, y.transcript.key);
  EXPECT_EQ(x.transcript.queries, 3);
  EXPECT_EQ(x.transcript.query_randomness, y.transcript.query_randomness);
  EXPECT_EQ(x.transcript.challenge_randomness, y.transcript.challenge_randomness);
}

TEST(Games, MalformedTemplatesAreRejected) {
  auto record = std::make_shared<Record>();
  const auto s = prf22();
  Rng rng(21);
  const auto classical = [](const GameContext&) -> ChallengeTemplate { return ClassicalChallenge{0, 1}; };
  const auto wide = [](const GameContext&) -> ChallengeTemplate { return ClassicalChallenge{0, 4}; };
  const auto short_desc = [](const GameContext&) -> ChallengeTemplate {
    return DescriptionChallenge{quantum::uniform_superposition(1), quantum::uniform_superposition(1)};
  };
  const auto bad_regs = [](const GameContext&) -> ChallengeTemplate {
    return RegisterChallenge{QuantumSystem(StateVector::zero(4)), {0}, {1, 2}, {}};
  };
  const auto overlapping = [](const GameContext&) -> ChallengeTemplate {
    return RegisterChallenge{QuantumSystem(StateVector::zero(8)), {0, 1}, {1, 2}, {4, 5, 6, 7}};
  };
  EXPECT_THROW(run_qind_qcpa(s, spy(classical, record), rng), InvalidArgument);
  EXPECT_THROW(run_ind_qcpa(s, spy(wide, record), rng), InvalidArgument);
  EXPECT_THROW(run_qind_qcpa(s, spy(short_desc, record), rng), InvalidArgument);
  EXPECT_THROW(run_gqind_qcpa(s, spy(bad_regs, record), rng), InvalidArgument);
  EXPECT_THROW(run_fqind_qcpa(s, spy(overlapping, record), rng), InvalidArgument);
  EXPECT_THROW(run_fqind_qcpa(s, spy(classical, record), rng), InvalidArgument);
  GameSettings wide_r;
  wide_r.challenge_randomness = 4;
  EXPECT_THROW(run_ind_qcpa(s, spy(classical, record), rng, wide_r), InvalidArgument);
  const auto bad_query = [] {
    std::vector<QueryRequest> q;
    q.push_back({QuantumSystem(StateVector::zero(3)), 0});
    return q;
  };
  EXPECT_THROW(run_ind_qcpa(s, spy(classical, record, bad_query), rng), InvalidArgument);
}

}  // namespace
}  // namespace qindlab::games
