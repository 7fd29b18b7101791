#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qindlab/schemes/scheme.hpp"

namespace qindlab::cli {

// Type-1 / type-2 oracle equivalence at one key, maximized over the
// randomness values checked.
struct EquivalenceCase {
  schemes::Key key = 0;
  std::uint64_t randomness_values = 0;
  // type1_from_type2(U2) against the type-1 oracle.
  double type1_deviation = 0.0;
  // type2_from_type1 against U2 restricted to zero ancillas.
  double type2_deviation = 0.0;
  // (U2)^dagger |Enc(x)> = |x, 0> for every x and r checked.
  bool adjoint_decrypts = true;
};

struct EquivalenceReport {
  std::vector<EquivalenceCase> cases;
  double max_deviation = 0.0;
  bool adjoint_decrypts = true;
  bool pass = false;
};

inline constexpr double kEquivalenceTolerance = 1e-12;

// Keys come from Rng(seed). Every randomness value is checked when there are
// at most 8 of them, otherwise one sampled value per key.
EquivalenceReport check_equivalence(const schemes::SchemePtr& scheme, int keys, std::uint64_t seed);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  // Runtime limit in seconds (0 for none). For the last criterion it applies
  // to the whole battery.
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  int jobs = 1;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  double seconds = 0.0;
  bool pass = false;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

}  // namespace qindlab::cli
