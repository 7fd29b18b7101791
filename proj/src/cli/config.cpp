#include "qindlab/cli/config.hpp"

#include <type_traits>

#include "qindlab/common/error.hpp"

namespace qindlab::cli {

namespace {

template <typename T>
void read(const Json& doc, const char* key, T& target) {
  if (!doc.contains(key)) return;
  if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
    if (!doc.at(key).is_number_integer()) {
      throw InvalidArgument(std::string("config field '") + key + "' must be an integer");
    }
    if (std::is_unsigned_v<T> && !doc.at(key).is_number_unsigned()) {
      throw InvalidArgument(std::string("config field '") + key + "' must be non-negative");
    }
  }
  try {
    target = doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("config field '") + key + "' has the wrong type");
  }
}

void read_optional(const Json& doc, const char* key, std::optional<std::uint64_t>& target) {
  if (!doc.contains(key)) return;
  std::uint64_t value = 0;
  read(doc, key, value);
  target = value;
}

schemes::Prf build_prf(const ExperimentConfig& c) {
  if (c.prf == "feistel") return schemes::feistel_prf(c.tau, c.m);
  if (c.prf == "zero") return schemes::zero_prf(c.tau, c.m);
  if (c.prf == "random") return schemes::random_function_prf(c.tau, c.m);
  throw InvalidArgument("unknown prf '" + c.prf + "'");
}

schemes::FamilyPtr build_family(const ExperimentConfig& c) {
  const int block = c.m + c.tau;
  if (c.family == "ideal") return schemes::ideal_prp_family(block);
  if (c.family == "feistel") return schemes::feistel_prp_family(block, c.rounds);
  if (c.family == "identity") return schemes::identity_family(block);
  throw InvalidArgument("unknown permutation family '" + c.family + "'");
}

}  // namespace

void apply_json(ExperimentConfig& config, const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("config file must hold a JSON object");
  static const char* known[] = {"command", "name",  "scheme", "prf",     "family",       "m",      "tau",
                                "mu",    "rounds", "game",    "trials",       "seed",   "mode",
                                "samples", "perm_samples", "t_size", "queries", "keys", "jobs", "force"};
  for (const auto& item : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw InvalidArgument("unknown config field '" + item.key() + "'");
  }
  if (doc.contains("command") && doc["command"] != config.command) {
    throw InvalidArgument("config file is for '" + doc["command"].dump() + "', not '" + config.command + "'");
  }
  read(doc, "name", config.name);
  read(doc, "scheme", config.scheme);
  read(doc, "prf", config.prf);
  read(doc, "family", config.family);
  read(doc, "m", config.m);
  read(doc, "tau", config.tau);
  read(doc, "mu", config.mu);
  read(doc, "rounds", config.rounds);
  read(doc, "game", config.game);
  read_optional(doc, "trials", config.trials);
  read_optional(doc, "seed", config.seed);
  read(doc, "mode", config.mode);
  read(doc, "samples", config.samples);
  read(doc, "perm_samples", config.perm_samples);
  read(doc, "t_size", config.t_size);
  read(doc, "queries", config.queries);
  read(doc, "keys", config.keys);
  read(doc, "jobs", config.jobs);
  read(doc, "force", config.force);
}

Json to_json(const ExperimentConfig& c) {
  Json j;
  j["command"] = c.command;
  auto scheme_fields = [&] {
    j["scheme"] = c.scheme;
    if (c.scheme == "prf" || c.scheme == "prf-padded") {
      j["prf"] = c.prf;
    } else {
      j["family"] = c.family;
      if (c.family == "feistel") j["rounds"] = c.rounds;
    }
    j["m"] = c.m;
    j["tau"] = c.tau;
    if (c.scheme == "block") j["mu"] = c.mu;
  };
  if (c.command == "attack" || c.command == "secure") {
    j["name"] = c.name;
    scheme_fields();
    j["game"] = c.game;
    j["mode"] = c.mode;
    j["trials"] = c.trials ? Json(*c.trials) : Json(nullptr);
    j["queries"] = c.queries;
    j["force"] = c.force;
  } else if (c.command == "lemma") {
    j["m"] = c.m;
    j["tau"] = c.tau;
    j["mode"] = c.mode;
    j["samples"] = c.samples;
    if (c.mode == "sampled") j["perm_samples"] = c.perm_samples;
    j["t_size"] = c.t_size;
  } else if (c.command == "equiv") {
    scheme_fields();
    j["keys"] = c.keys;
  }
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["jobs"] = c.jobs;
  return j;
}

schemes::SchemePtr build_scheme(const ExperimentConfig& c) {
  if (c.m < 1) throw InvalidArgument("m must be at least 1");
  if (c.tau < 0) throw InvalidArgument("tau must be non-negative");
  if (c.scheme == "prf") return schemes::prf_scheme(c.m, c.tau, build_prf(c));
  if (c.scheme == "prf-padded") return schemes::prf_scheme(c.m, c.tau, build_prf(c), 1);
  if (c.scheme == "prp") return schemes::prp_scheme(c.m, c.tau, build_family(c));
  if (c.scheme == "block") {
    return schemes::block_scheme(schemes::prp_scheme(c.m, c.tau, build_family(c)), c.mu);
  }
  throw InvalidArgument("unknown scheme '" + c.scheme + "'");
}

}  // namespace qindlab::cli
