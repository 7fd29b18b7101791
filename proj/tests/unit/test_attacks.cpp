#include <cmath>

#include <gtest/gtest.h>

#include "qindlab/attacks/attacks.hpp"
#include "qindlab/common/error.hpp"
#include "qindlab/games/advantage.hpp"

namespace qindlab::attacks {
namespace {

using games::EstimateOptions;
using games::EvalMode;
using games::GameSettings;
using schemes::Key;
using schemes::SchemePtr;

GameSettings exact_at(Key k, Word r) {
  GameSettings s;
  s.mode = EvalMode::Exact;
  s.key = k;
  s.challenge_randomness = r;
  return s;
}

TEST(EntanglementAttack, ExactWinRateIsOneMinusHalfPowerOfM) {
  for (int m = 1; m <= 4; ++m) {
    const auto s = schemes::prf_scheme(m, 1, schemes::feistel_prf(1, m));
    const auto spec = bz_attack(m);
    ASSERT_TRUE(spec.expected_win_rate);
    EXPECT_DOUBLE_EQ(spec.expected_win_rate->value(), 1.0 - std::ldexp(1.0, -(m + 1)));
    EstimateOptions opt;
    opt.trials = 8;
    opt.seed = static_cast<std::uint64_t>(m);
    opt.mode = EvalMode::Exact;
    const auto est = games::estimate_advantage(games::GameVariant::FqindQcpa, s, spec.factory, opt);
    EXPECT_NEAR(est.win_rate, 1.0 - std::ldexp(1.0, -(m + 1)), 1e-12) << "m=" << m;
  }
}

TEST(EntanglementAttack, ZeroBranchAlwaysWins) {
  const auto s = schemes::prp_scheme(2, 1, schemes::ideal_prp_family(3));
  Rng rng(1);
  int zero_branches = 0;
  for (int i = 0; i < 400; ++i) {
    const auto out = games::run_fqind_qcpa(s, bz_adversary(2), rng);
    if (out.b == 0) {
      ++zero_branches;
      EXPECT_TRUE(out.win);
    }
  }
  EXPECT_GT(zero_branches, 100);
}

TEST(EntanglementAttack, OnlyPlaysFullyQuantumGame) {
  const auto s = schemes::prf_scheme(2, 1, schemes::feistel_prf(1, 2));
  Rng rng(2);
  EXPECT_THROW(games::run_qind_qcpa(s, bz_adversary(2), rng), NotApplicable);
  EXPECT_FALSE(bz_attack(2).supports(games::GameVariant::QindQcpa));
}

TEST(QlpDistinguisher, WinsForEveryKeyAndRandomness) {
  const int m = 2;
  const int tau = 2;
  const std::vector<SchemePtr> schemes = {
      schemes::prf_scheme(m, tau, schemes::feistel_prf(tau, m)),
      schemes::prf_scheme(m, tau, schemes::zero_prf(tau, m)),
      schemes::prf_scheme(m, tau, schemes::random_function_prf(tau, m)),
      schemes::prp_scheme(m, 0, schemes::ideal_prp_family(m)),
  };
  for (const auto& s : schemes) {
    Rng keys(3);
    for (int i = 0; i < 16; ++i) {
      const Key k = s->gen(keys);
      for (Word r = 0; r < dimension_of(s->randomness_bits()); ++r) {
        for (auto v : {games::GameVariant::QindQcpa, games::GameVariant::GqindQcpa}) {
          Rng rng(4);
          const auto out = games::run_game(v, s, qlp_distinguisher(m), rng, exact_at(k, r));
          EXPECT_NEAR(out.win_probability, 1.0, 1e-12) << s->name();
        }
      }
    }
  }
}

TEST(QlpDistinguisher, OneBranchHasNoWeightOnZeroCore) {
  const int m = 3;
  const auto s = schemes::prf_scheme(m, 2, schemes::feistel_prf(2, m));
  Rng keys(5);
  for (int i = 0; i < 8; ++i) {
    const Key k = s->gen(keys);
    for (Word r = 0; r < 4; ++r) {
      auto one = games::qind_challenge_state(s, k, r, quantum::hadamard_of_ones(m));
      auto zero = games::qind_challenge_state(s, k, r, quantum::uniform_superposition(m));
      const auto core = quantum::wire_range(s->ciphertext_bits() - m, m);
      one.apply(quantum::hadamard_all(m), core);
      zero.apply(quantum::hadamard_all(m), core);
      EXPECT_NEAR(one.probability(core, 0), 0.0, 1e-12);
      EXPECT_NEAR(zero.probability(core, 0), 1.0, 1e-12);
    }
  }
}

TEST(QlpDistinguisher, RefusesSchemesWithoutShortCore) {
  Rng rng(6);
  const auto prp = schemes::prp_scheme(2, 2, schemes::ideal_prp_family(4));
  const auto padded = schemes::prf_scheme(2, 2, schemes::feistel_prf(2, 2), 1);
  try {
    games::run_qind_qcpa(prp, qlp_distinguisher(2), rng);
    FAIL() << "expected NotApplicable";
  } catch (const NotApplicable& e) {
    EXPECT_NE(std::string(e.what()).find("no core decomposition"), std::string::npos);
  }
  EXPECT_THROW(games::run_qind_qcpa(padded, qlp_distinguisher(2), rng), NotApplicable);
  EXPECT_THROW(games::run_fqind_qcpa(padded, qlp_distinguisher(2, true), rng), NotApplicable);
}

TEST(QlpDistinguisher, ForcedAgainstPrpStaysWithinBound) {
  const auto s = schemes::prp_scheme(2, 3, schemes::ideal_prp_family(5));
  EstimateOptions opt;
  opt.trials = 3000;
  opt.seed = 7;
  const auto est = games::estimate_advantage(games::GameVariant::QindQcpa, s, qlp_distinguisher(2, true), opt);
  EXPECT_LE(std::abs(est.advantage), 4.0 / 8.0 + est.advantage_half_width);
  EXPECT_LT(est.win_rate, 0.9);
}

TEST(QlpDistinguisher, ForcedOnPaddedSchemeWinsThreeQuarters) {
  // The Hadamard test covers the last core wire and the padding wire. With
  // b = 0 the padding wire reads 0 half the time; with b = 1 the core wire
  // always reads 1.
  const auto s = schemes::prf_scheme(2, 2, schemes::feistel_prf(2, 2), 1);
  Rng keys(8);
  for (int i = 0; i < 4; ++i) {
    const Key k = s->gen(keys);
    for (Word r = 0; r < 4; ++r) {
      Rng rng(9);
      EXPECT_NEAR(games::run_qind_qcpa(s, qlp_distinguisher(2, true), rng, exact_at(k, r)).win_probability, 0.75,
                  1e-12);
    }
  }
}

TEST(HadamardBit, WinsAgainstSingleBitPrf) {
  for (int tau : {1, 2}) {
    const auto s = schemes::prf_scheme(1, tau, schemes::feistel_prf(tau, 1));
    Rng keys(10);
    for (int i = 0; i < 8; ++i) {
      const Key k = s->gen(keys);
      for (Word r = 0; r < dimension_of(tau); ++r) {
        Rng rng(11);
        EXPECT_NEAR(games::run_qind_qcpa(s, hadamard_bit_distinguisher(), rng, exact_at(k, r)).win_probability, 1.0,
                    1e-12);
      }
    }
  }
  const auto spec = find_attack("hadamard-bit", 1);
  ASSERT_TRUE(spec.expected_win_rate);
  EXPECT_DOUBLE_EQ(spec.expected_win_rate->value(), 1.0);
}

TEST(HadamardBit, RequiresSingleBitMessages) {
  const auto s = schemes::prf_scheme(2, 1, schemes::feistel_prf(1, 2));
  Rng rng(12);
  EXPECT_THROW(games::run_qind_qcpa(s, hadamard_bit_distinguisher(), rng), NotApplicable);
  EXPECT_THROW(find_attack("hadamard-bit", 2), NotApplicable);
}

TEST(LiftedHadamardBit, MatchesSingleBitAttackOnPrf) {
  const auto s = schemes::prf_scheme(3, 2, schemes::random_function_prf(2, 3));
  Rng keys(13);
  for (int i = 0; i < 4; ++i) {
    const Key k = s->gen(keys);
    for (Word r = 0; r < 4; ++r) {
      Rng rng(14);
      EXPECT_NEAR(
          games::run_qind_qcpa(s, lifted_hadamard_bit_distinguisher(3), rng, exact_at(k, r)).win_probability, 1.0,
          1e-12);
    }
  }
}

TEST(EntangledBlock, StaysWithinBlockBound) {
  const auto s = schemes::block_scheme(schemes::prp_scheme(2, 4, schemes::ideal_prp_family(6)), 2);
  EstimateOptions opt;
  opt.trials = 1000;
  opt.seed = 15;
  const auto est =
      games::estimate_advantage(games::GameVariant::GqindQcpa, s, entangled_block_adversary(2, 2), opt);
  EXPECT_LE(std::abs(est.advantage), 2.0 * (4.0 / 16.0) + est.advantage_half_width);
  EXPECT_THROW(find_attack("entangled-block", 2, 1), NotApplicable);
}

TEST(Attacks, IssueNoLearningQueriesUnlessWrapped) {
  const auto prf = schemes::prf_scheme(1, 1, schemes::feistel_prf(1, 1));
  Rng rng(16);
  EXPECT_EQ(games::run_fqind_qcpa(prf, bz_adversary(1), rng).transcript.queries, 0);
  EXPECT_EQ(games::run_qind_qcpa(prf, qlp_distinguisher(1), rng).transcript.queries, 0);
  EXPECT_EQ(games::run_qind_qcpa(prf, hadamard_bit_distinguisher(), rng).transcript.queries, 0);
  EXPECT_EQ(games::run_ind_qcpa(prf, random_guesser(1), rng).transcript.queries, 0);
  for (auto v : {games::GameVariant::IndQcpa, games::GameVariant::FqindQcpa, games::GameVariant::QindQcpa,
                 games::GameVariant::GqindQcpa}) {
    const auto out = games::run_game(v, prf, with_learning_queries(random_guesser(1), 2), rng);
    EXPECT_EQ(out.transcript.queries, 2);
    EXPECT_EQ(out.transcript.query_randomness.size(), 2u);
  }
  EXPECT_THROW(with_learning_queries(random_guesser(1), -1), InvalidArgument);
}

TEST(Attacks, QueriesDoNotChangeExactWinOfQlp) {
  const auto s = schemes::prf_scheme(2, 2, schemes::feistel_prf(2, 2));
  EstimateOptions opt;
  opt.trials = 4;
  opt.seed = 17;
  opt.mode = EvalMode::Exact;
  const auto est = games::estimate_advantage(games::GameVariant::QindQcpa, s,
                                             with_learning_queries(qlp_distinguisher(2), 2), opt);
  EXPECT_NEAR(est.win_rate, 1.0, 1e-12);
}

TEST(Registry, KnownNamesAndGames) {
  EXPECT_EQ(find_attack("bz", 2).games, std::vector<games::GameVariant>{games::GameVariant::FqindQcpa});
  EXPECT_TRUE(find_attack("qlp", 2).supports(games::GameVariant::GqindQcpa));
  EXPECT_TRUE(find_attack("random", 2).supports(games::GameVariant::IndQcpa));
  EXPECT_DOUBLE_EQ(find_attack("random", 2).expected_win_rate->value(), 0.5);
  EXPECT_FALSE(find_attack("hadamard-bit-lifted", 2).expected_win_rate);
  EXPECT_TRUE(find_attack("entangled-block", 2, 2).supports(games::GameVariant::GqindQcpa));
  EXPECT_THROW(find_attack("grover", 2), InvalidArgument);
  EXPECT_THROW(bz_adversary(0), InvalidArgument);
}

}  // namespace
}  // namespace qindlab::attacks
