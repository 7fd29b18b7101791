#pragma once

#include <cstdint>

#include "qindlab/games/game.hpp"

namespace qindlab::games {

inline constexpr double kConfidenceLevel = 0.99;

struct EstimateOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  EvalMode mode = EvalMode::Sampled;
  int jobs = 1;
};

// In exact mode `wins` is the sum of per-trial win probabilities.
struct AdvantageEstimate {
  std::uint64_t trials = 0;
  double wins = 0.0;
  double win_rate = 0.0;
  double advantage = 0.0;
  // Two-sided 99% Hoeffding interval on the win rate, clipped to [0, 1].
  double half_width = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  // 99% Wilson score interval, reported alongside.
  double wilson_low = 0.0;
  double wilson_high = 0.0;
  // Half-width on the advantage scale (2 * half_width).
  double advantage_half_width = 0.0;
};

// sqrt(ln(2 / (1 - level)) / (2 n))
double hoeffding_half_width(std::uint64_t trials, double level = kConfidenceLevel);

// Trial i runs on a stream seeded with derive_seed(seed, i); results are
// summed in trial order whatever the number of worker threads.
AdvantageEstimate estimate_advantage(GameVariant variant, const SchemePtr& scheme,
                                     const AdversaryFactory& factory, const EstimateOptions& options);

}  // namespace qindlab::games
