#include "qindlab/games/advantage.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qindlab/common/error.hpp"

namespace qindlab::games {

namespace {

// Two-sided standard normal quantile at 99%.
constexpr double kZ99 = 2.5758293035489004;

}  // namespace

double hoeffding_half_width(std::uint64_t trials, double level) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  return std::sqrt(std::log(2.0 / (1.0 - level)) / (2.0 * static_cast<double>(trials)));
}

AdvantageEstimate estimate_advantage(GameVariant variant, const SchemePtr& scheme,
                                     const AdversaryFactory& factory, const EstimateOptions& options) {
  if (options.trials == 0) throw InvalidArgument("trials must be at least 1");
  if (options.jobs < 1) throw InvalidArgument("jobs must be at least 1");
  const std::uint64_t n = options.trials;
  std::vector<double> results(static_cast<std::size_t>(n), 0.0);
  GameSettings settings;
  settings.mode = options.mode;

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](std::uint64_t first, std::uint64_t stride) {
    try {
      for (std::uint64_t i = first; i < n; i += stride) {
        Rng rng(derive_seed(options.seed, i));
        results[static_cast<std::size_t>(i)] =
            run_game(variant, scheme, factory, rng, settings).win_probability;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const auto jobs = static_cast<std::uint64_t>(std::min<std::uint64_t>(options.jobs, n));
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t j = 0; j < jobs; ++j) threads.emplace_back(worker, j, jobs);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  AdvantageEstimate est;
  est.trials = n;
  for (double r : results) est.wins += r;
  est.win_rate = est.wins / static_cast<double>(n);
  est.advantage = 2.0 * est.win_rate - 1.0;
  est.half_width = hoeffding_half_width(n);
  est.ci_low = std::max(0.0, est.win_rate - est.half_width);
  est.ci_high = std::min(1.0, est.win_rate + est.half_width);
  est.advantage_half_width = 2.0 * est.half_width;

  const double nn = static_cast<double>(n);
  const double z2 = kZ99 * kZ99;
  const double centre = (est.win_rate + z2 / (2.0 * nn)) / (1.0 + z2 / nn);
  const double spread =
      kZ99 * std::sqrt(est.win_rate * (1.0 - est.win_rate) / nn + z2 / (4.0 * nn * nn)) / (1.0 + z2 / nn);
  est.wilson_low = std::max(0.0, centre - spread);
  est.wilson_high = std::min(1.0, centre + spread);
  return est;
}

}  // namespace qindlab::games
