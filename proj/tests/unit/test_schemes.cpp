#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "qindlab/common/error.hpp"
#include "qindlab/schemes/scheme.hpp"

namespace qindlab::schemes {
namespace {

std::vector<Key> sample_keys(const SchemePtr& s, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Key> keys;
  for (int i = 0; i < count; ++i) keys.push_back(s->gen(rng));
  return keys;
}

void expect_round_trip(const SchemePtr& s, int keys, std::uint64_t seed) {
  for (Key k : sample_keys(s, keys, seed)) {
    for (Word r = 0; r < dimension_of(s->randomness_bits()); ++r) {
      for (Word x = 0; x < dimension_of(s->message_bits()); ++x) {
        const Word y = s->enc(k, r, x);
        ASSERT_LT(y, dimension_of(s->ciphertext_bits()));
        ASSERT_EQ(s->dec(k, y), x) << s->name() << " k=" << k << " r=" << r << " x=" << x;
      }
    }
  }
}

std::vector<SchemePtr> shipped_schemes(int m, int tau) {
  std::vector<SchemePtr> out = {
      prf_scheme(m, tau, zero_prf(tau, m)),
      prf_scheme(m, tau, feistel_prf(tau, m)),
      prf_scheme(m, tau, random_function_prf(tau, m)),
      prf_scheme(m, tau, feistel_prf(tau, m), 1),
      prp_scheme(m, tau, ideal_prp_family(m + tau)),
      prp_scheme(m, tau, identity_family(m + tau)),
  };
  if ((m + tau) % 2 == 0) out.push_back(prp_scheme(m, tau, feistel_prp_family(m + tau, 4)));
  return out;
}

TEST(PrfScheme, ZeroPrfLeavesMessageInTheClear) {
  const auto s = prf_scheme(2, 3, zero_prf(3, 2));
  for (Word r = 0; r < 8; ++r) {
    for (Word x = 0; x < 4; ++x) {
      EXPECT_EQ(s->enc(0, r, x), (r << 2) | x);
      EXPECT_EQ(s->dec(0, s->enc(0, r, x)), x);
    }
  }
}

TEST(PrfScheme, ExhaustiveRoundTripAtTwoTwo) {
  const auto s = prf_scheme(2, 2, feistel_prf(2, 2));
  expect_round_trip(s, 32, 1);
}

TEST(PrfScheme, CiphertextPrefixIsRandomness) {
  for (const auto& prf : {zero_prf(3, 2), feistel_prf(3, 2), random_function_prf(3, 2)}) {
    for (int pad : {0, 1}) {
      const auto s = prf_scheme(2, 3, prf, pad);
      for (Key k : sample_keys(s, 8, 2)) {
        for (Word r = 0; r < 8; ++r) {
          for (Word x = 0; x < 4; ++x) EXPECT_EQ(s->enc(k, r, x) >> (s->ciphertext_bits() - 3), r);
        }
      }
    }
  }
}

TEST(PrfScheme, RejectsBadParameters) {
  EXPECT_THROW(prf_scheme(0, 2, zero_prf(2, 0)), InvalidArgument);
  EXPECT_THROW(prf_scheme(2, 0, zero_prf(0, 2)), InvalidArgument);
  EXPECT_THROW(prf_scheme(2, 2, zero_prf(3, 2)), InvalidArgument);
}

TEST(PrpScheme, IdentityFamilyConcatenates) {
  const auto s = prp_scheme(2, 2, identity_family(4));
  for (Word r = 0; r < 4; ++r) {
    for (Word x = 0; x < 4; ++x) {
      EXPECT_EQ(s->enc(0, r, x), (x << 2) | r);
      EXPECT_EQ(s->dec(0, s->enc(0, r, x)), x);
    }
  }
}

TEST(PrpScheme, IdealFamilyRoundTrip) { expect_round_trip(prp_scheme(2, 2, ideal_prp_family(4)), 16, 3); }

TEST(PrpScheme, RejectsBlockSizeMismatch) {
  EXPECT_THROW(prp_scheme(2, 2, ideal_prp_family(5)), InvalidArgument);
}

TEST(Schemes, EveryShippedSchemeRoundTrips) {
  for (int m = 1; m <= 4; ++m) {
    for (int tau = 1; tau <= 4; ++tau) {
      for (const auto& s : shipped_schemes(m, tau)) expect_round_trip(s, 4, static_cast<std::uint64_t>(10 * m + tau));
    }
  }
}

TEST(BlockScheme, SingleBlockIsTheBaseScheme) {
  const auto base = prp_scheme(2, 2, ideal_prp_family(4));
  const auto b = block_scheme(base, 1);
  for (Key k : sample_keys(base, 4, 4)) {
    for (Word r = 0; r < 4; ++r) {
      for (Word x = 0; x < 4; ++x) EXPECT_EQ(b->enc(k, r, x), base->enc(k, r, x));
    }
  }
}

TEST(BlockScheme, TwoBlocksRoundTripAndLength) {
  const auto b = block_scheme(prp_scheme(2, 2, ideal_prp_family(4)), 2);
  EXPECT_EQ(b->message_bits(), 4);
  EXPECT_EQ(b->randomness_bits(), 4);
  EXPECT_EQ(b->ciphertext_bits(), 2 * (2 + 2));
  expect_round_trip(b, 4, 5);
}

TEST(BlockScheme, BlocksDecryptIndependently) {
  const int m = 2;
  const int l = 4;
  const auto base = prp_scheme(m, 2, ideal_prp_family(4));
  const auto b = block_scheme(base, 3);
  Rng rng(6);
  const Key k = b->gen(rng);
  for (int trial = 0; trial < 50; ++trial) {
    const Word x = rng.bits(b->message_bits());
    const Word r = rng.bits(b->randomness_bits());
    const Word y = b->enc(k, r, x);
    std::vector<Word> yb(3);
    std::vector<Word> xb(3);
    for (int i = 0; i < 3; ++i) {
      yb[static_cast<std::size_t>(i)] = (y >> (l * (2 - i))) & low_mask(l);
      xb[static_cast<std::size_t>(i)] = (x >> (m * (2 - i))) & low_mask(m);
    }
    // Blocks in order (2, 0, 1).
    const Word shuffled = concat(concat(yb[2], yb[0], l), yb[1], l);
    const Word expected = concat(concat(xb[2], xb[0], m), xb[1], m);
    EXPECT_EQ(b->dec(k, shuffled), expected);
  }
}

TEST(BlockScheme, RejectsNonPrpBaseAndBadSplit) {
  EXPECT_THROW(block_scheme(prf_scheme(2, 2, zero_prf(2, 2)), 2), InvalidArgument);
  EXPECT_THROW(block_scheme(prp_scheme(2, 2, ideal_prp_family(4)), 0), InvalidArgument);
  EXPECT_THROW(split_message(0, 5, 2), InvalidArgument);
  EXPECT_EQ(split_message(0b1101, 4, 2), (std::vector<Word>{0b11, 0b01}));
}

TEST(IdealPrp, InverseUndoesForwardExhaustively) {
  const auto f = ideal_prp_family(4);
  Rng rng(7);
  for (int i = 0; i < 8; ++i) {
    const Key k = f->gen(rng);
    std::set<Word> image;
    for (Word x = 0; x < 16; ++x) {
      image.insert(f->forward(k, x));
      EXPECT_EQ(f->inverse(k, f->forward(k, x)), x);
    }
    EXPECT_EQ(image.size(), 16u);
  }
}

TEST(IdealPrp, DistinctKeysGiveDistinctPermutations) {
  const auto f = ideal_prp_family(4);
  Rng rng(8);
  int differing = 0;
  for (int i = 0; i < 50; ++i) {
    const Key a = f->gen(rng);
    const Key b = f->gen(rng);
    bool same = true;
    for (Word x = 0; x < 16; ++x) same = same && f->forward(a, x) == f->forward(b, x);
    differing += same ? 0 : 1;
  }
  EXPECT_EQ(differing, 50);
}

TEST(IdealPrp, ImageOfZeroIsUniform) {
  const auto f = ideal_prp_family(4);
  Rng rng(9);
  const int n = 10000;
  std::vector<int> counts(16, 0);
  for (int i = 0; i < n; ++i) ++counts[f->forward(f->gen(rng), 0)];
  const double p = 1.0 / 16.0;
  const double sigma = std::sqrt(n * p * (1.0 - p));
  for (int c : counts) EXPECT_LE(std::abs(c - n * p), 4.0 * sigma);
}

TEST(IdealPrp, LazyTablesStayConsistent) {
  const auto f = ideal_prp_family(20);
  Rng rng(10);
  const Key k = f->gen(rng);
  std::vector<Word> xs;
  std::vector<Word> ys;
  for (int i = 0; i < 200; ++i) {
    xs.push_back(rng.bits(20));
    ys.push_back(f->forward(k, xs.back()));
    ASSERT_LT(ys.back(), dimension_of(20));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_EQ(f->forward(k, xs[i]), ys[i]);
    EXPECT_EQ(f->inverse(k, ys[i]), xs[i]);
  }
}

TEST(Feistel, InvertibleAtSixBits) {
  const auto f = feistel_prp_family(6, 4);
  Rng rng(11);
  for (int i = 0; i < 8; ++i) {
    const Key k = f->gen(rng);
    std::set<Word> image;
    for (Word x = 0; x < 64; ++x) {
      image.insert(f->forward(k, x));
      EXPECT_EQ(f->inverse(k, f->forward(k, x)), x);
    }
    EXPECT_EQ(image.size(), 64u);
  }
}

TEST(Feistel, KeyBitsAffectOutput) {
  const auto f = feistel_prp_family(6, 4);
  Rng rng(12);
  const Key k = f->gen(rng);
  for (int bit = 0; bit < 16; ++bit) {
    const Key k2 = k ^ (Key{1} << bit);
    bool differs = false;
    for (Word x = 0; x < 64 && !differs; ++x) differs = f->forward(k, x) != f->forward(k2, x);
    EXPECT_TRUE(differs) << "key bit " << bit;
  }
}

TEST(Feistel, ZeroRoundFunctionIsSwapComposition) {
  // Each round is a half swap; an even number of rounds is the identity.
  const auto zero = [](Key, int, Word) { return Word{0}; };
  for (int rounds : {4, 6}) {
    const auto f = feistel_prp_family(6, rounds, zero);
    for (Word x = 0; x < 64; ++x) EXPECT_EQ(f->forward(0, x), x);
  }
  const auto odd = feistel_prp_family(6, 5, zero);
  for (Word x = 0; x < 64; ++x) EXPECT_EQ(odd->forward(0, x), ((x & 7U) << 3) | (x >> 3));
}

TEST(Feistel, RejectsOddBlocksAndFewRounds) {
  EXPECT_THROW(feistel_prp_family(5, 4), InvalidArgument);
  EXPECT_THROW(feistel_prp_family(6, 3), InvalidArgument);
}

TEST(CoreFunction, PrfCoreIsPrfXorMessage) {
  const auto prf = feistel_prf(2, 2);
  const auto s = prf_scheme(2, 2, prf);
  const auto core = core_function(s);
  EXPECT_EQ(core.bits, 2);
  for (Key k : sample_keys(s, 8, 13)) {
    for (Word r = 0; r < 4; ++r) {
      for (Word x = 0; x < 4; ++x) {
        EXPECT_EQ(core.f(k, r, x), prf.eval(k, r) ^ x);
        EXPECT_EQ(core.f_inverse(k, r, core.f(k, r, x)), x);
        EXPECT_EQ(s->enc(k, r, x), concat(r, core.f(k, r, x), 2));
      }
    }
  }
}

TEST(CoreFunction, PrpHasNone) {
  const auto s = prp_scheme(2, 2, ideal_prp_family(4));
  try {
    core_function(s);
    FAIL() << "expected NoCoreDecomposition";
  } catch (const NoCoreDecomposition& e) {
    EXPECT_NE(std::string(e.what()).find("no core decomposition"), std::string::npos);
  }
  EXPECT_THROW(is_quasi_length_preserving(s), NoCoreDecomposition);
}

TEST(QuasiLengthPreserving, PrfYesPaddedNo) {
  EXPECT_TRUE(is_quasi_length_preserving(prf_scheme(2, 2, feistel_prf(2, 2))));
  EXPECT_FALSE(is_quasi_length_preserving(prf_scheme(2, 2, feistel_prf(2, 2), 1)));
  EXPECT_TRUE(is_quasi_length_preserving(prp_scheme(2, 0, identity_family(2))));
}

}  // namespace
}  // namespace qindlab::schemes
