#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qindlab/schemes/scheme.hpp"

namespace qindlab::cli {

using Json = nlohmann::ordered_json;

// Effective settings of one run: defaults, overridden by the config file,
// overridden by flags.
struct ExperimentConfig {
  std::string command;
  std::string name;               // attack
  std::string scheme = "prf";     // prf | prf-padded | prp | block
  std::string prf = "feistel";    // feistel | zero | random
  std::string family = "ideal";   // ideal | feistel | identity
  int m = 2;
  int tau = 2;
  int mu = 1;
  int rounds = 4;
  std::string game;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string mode = "sampled";   // sampled | exact
  std::uint64_t samples = 500;
  std::uint64_t perm_samples = 5000;
  std::uint64_t t_size = 0;
  int queries = 0;
  int keys = 8;
  int jobs = 1;
  bool force = false;
};

// Overrides from a JSON object; unknown keys and wrong types are errors.
void apply_json(ExperimentConfig& config, const Json& doc);

// Normalized echo of the fields that matter for `config.command`.
Json to_json(const ExperimentConfig& config);

schemes::SchemePtr build_scheme(const ExperimentConfig& config);

}  // namespace qindlab::cli
