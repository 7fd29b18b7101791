#include "qindlab/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qindlab/attacks/attacks.hpp"
#include "qindlab/channels/channels.hpp"
#include "qindlab/cli/acceptance.hpp"
#include "qindlab/common/error.hpp"
#include "qindlab/games/advantage.hpp"

namespace qindlab::cli {

namespace {

using games::GameVariant;

struct Flags {
  std::optional<std::string> name, scheme, prf, family, game, mode, config, out;
  std::optional<int> m, tau, mu, rounds, queries, keys, jobs;
  std::optional<std::uint64_t> trials, seed, samples, perm_samples, t_size;
  bool force = false;
  bool no_timing = false;
  bool csv = false;
};

struct Outcome {
  Json result;
  bool pass = true;
};

void add_output_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON file with settings (flags take precedence)");
  sub->add_option("--out", f.out, "Write the result here instead of stdout");
  sub->add_flag("--csv", f.csv, "Emit field,value lines instead of JSON");
  sub->add_flag("--no-timing", f.no_timing, "Leave out the wall-clock field");
}

void add_scheme_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--scheme", f.scheme, "prf | prf-padded | prp | block");
  sub->add_option("--prf", f.prf, "feistel | zero | random (prf schemes)");
  sub->add_option("--family", f.family, "ideal | feistel | identity (prp and block schemes)");
  sub->add_option("--rounds", f.rounds, "Feistel rounds");
  sub->add_option("--m", f.m, "Message bits (per block for block schemes)");
  sub->add_option("--tau", f.tau, "Randomness bits (per block)");
  sub->add_option("--mu", f.mu, "Number of blocks");
}

void add_game_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--name", f.name, "Adversary: bz, qlp, hadamard-bit, hadamard-bit-lifted, random, echo, entangled-block");
  sub->add_option("--game", f.game, "ind | fqind | qind | gqind");
  sub->add_option("--trials", f.trials, "Number of games");
  sub->add_option("--seed", f.seed, "Master seed (falls back to QINDLAB_SEED)");
  sub->add_option("--mode", f.mode, "sampled | exact");
  sub->add_option("--queries", f.queries, "Learning queries before the challenge");
  sub->add_option("--jobs", f.jobs, "Worker threads");
  sub->add_flag("--force", f.force, "Run qlp against schemes that are not quasi-length-preserving");
}

template <typename T>
void take(const std::optional<T>& flag, T& target) {
  if (flag) target = *flag;
}

void merge_flags(const Flags& f, ExperimentConfig& c) {
  take(f.name, c.name);
  take(f.scheme, c.scheme);
  take(f.prf, c.prf);
  take(f.family, c.family);
  take(f.game, c.game);
  take(f.mode, c.mode);
  take(f.m, c.m);
  take(f.tau, c.tau);
  take(f.mu, c.mu);
  take(f.rounds, c.rounds);
  take(f.queries, c.queries);
  take(f.keys, c.keys);
  take(f.jobs, c.jobs);
  take(f.samples, c.samples);
  take(f.perm_samples, c.perm_samples);
  take(f.t_size, c.t_size);
  if (f.trials) c.trials = f.trials;
  if (f.seed) c.seed = f.seed;
  if (f.force) c.force = true;
}

void resolve_seed(ExperimentConfig& c, bool required) {
  if (!c.seed) {
    if (const char* env = std::getenv("QINDLAB_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        const std::string text(env);
        const auto value = std::stoull(text, &used);
        if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
        c.seed = value;
      } catch (const std::exception&) {
        throw InvalidArgument("QINDLAB_SEED must be a non-negative integer");
      }
    }
  }
  if (!c.seed) {
    if (required) throw InvalidArgument("sampled mode needs --seed (or QINDLAB_SEED)");
    c.seed = 0;
  }
}

void check_mode(const ExperimentConfig& c) {
  if (c.mode != "sampled" && c.mode != "exact") throw InvalidArgument("mode must be 'sampled' or 'exact'");
}

void check_jobs(const ExperimentConfig& c) {
  if (c.jobs < 1) throw InvalidArgument("jobs must be at least 1");
}

std::string join_games(const std::vector<GameVariant>& games) {
  std::string text;
  for (std::size_t i = 0; i < games.size(); ++i) {
    if (i > 0) text += i + 1 == games.size() ? " or " : ", ";
    text += games::to_string(games[i]);
  }
  return text;
}

Json estimate_json(const games::AdvantageEstimate& e) {
  Json j;
  j["trials"] = e.trials;
  j["wins"] = e.wins;
  j["win_rate"] = e.win_rate;
  j["advantage"] = e.advantage;
  j["confidence"] = {{"level", games::kConfidenceLevel},
                     {"method", "hoeffding"},
                     {"half_width", e.half_width},
                     {"low", e.ci_low},
                     {"high", e.ci_high},
                     {"advantage_half_width", e.advantage_half_width},
                     {"wilson_low", e.wilson_low},
                     {"wilson_high", e.wilson_high}};
  return j;
}

struct AttackRun {
  attacks::AttackSpec spec;
  GameVariant game;
  schemes::SchemePtr scheme;
  games::AdvantageEstimate estimate;
};

// Validates everything, then plays the games.
AttackRun run_attack(ExperimentConfig& c, bool prefer_qind) {
  check_mode(c);
  check_jobs(c);
  if (c.name.empty()) throw InvalidArgument("--name is required");
  if (c.queries < 0) throw InvalidArgument("queries must be non-negative");
  if (c.mu < 1) throw InvalidArgument("mu must be at least 1");
  if (!c.trials) c.trials = c.mode == "exact" ? 1 : 1000;
  if (*c.trials == 0) throw InvalidArgument("trials must be at least 1");
  resolve_seed(c, c.mode == "sampled");

  const auto scheme = build_scheme(c);
  const int attack_bits = c.name == "entangled-block" ? c.m : scheme->message_bits();
  auto spec = attacks::find_attack(c.name, attack_bits, c.mu, c.force);
  if (c.game.empty()) {
    c.game = prefer_qind && spec.supports(GameVariant::QindQcpa) ? "qind" : games::to_string(spec.games.front());
  }
  const GameVariant game = games::parse_game_variant(c.game);
  if (!spec.supports(game)) throw InvalidArgument(c.name + " requires " + join_games(spec.games));

  auto factory = c.queries > 0 ? attacks::with_learning_queries(spec.factory, c.queries) : spec.factory;
  const auto estimate = games::estimate_advantage(
      game, scheme, factory,
      games::EstimateOptions{*c.trials, *c.seed, games::parse_eval_mode(c.mode), c.jobs});
  return {std::move(spec), game, scheme, estimate};
}

// False when the scheme has no core decomposition at all.
bool quasi_length_preserving(const schemes::SchemePtr& s) {
  return s->has_core() && schemes::is_quasi_length_preserving(s);
}

Json scheme_json(const schemes::SchemePtr& s) {
  return {{"name", s->name()},
          {"message_bits", s->message_bits()},
          {"randomness_bits", s->randomness_bits()},
          {"ciphertext_bits", s->ciphertext_bits()},
          {"blocks", s->block_count()},
          {"core_decomposition", s->has_core()},
          {"quasi_length_preserving", quasi_length_preserving(s)}};
}

Outcome cmd_attack(ExperimentConfig& c) {
  const auto run = run_attack(c, false);
  Outcome o;
  o.result["attack"] = run.spec.name;
  o.result["game"] = games::to_string(run.game);
  o.result["scheme"] = scheme_json(run.scheme);
  o.result.update(estimate_json(run.estimate));

  // The perfect-distinguisher rates only hold against quasi-length-preserving
  // schemes.
  std::optional<double> expected;
  if (run.spec.expected_win_rate) expected = run.spec.expected_win_rate->value();
  if ((run.spec.name == "qlp" || run.spec.name == "hadamard-bit") && !quasi_length_preserving(run.scheme)) {
    expected.reset();
  }
  if (expected) {
    const double tolerance = c.mode == "exact" ? 1e-10 : run.estimate.half_width;
    o.pass = std::abs(run.estimate.win_rate - *expected) <= tolerance;
    o.result["expected_win_rate"] = *expected;
    o.result["expected_tolerance"] = tolerance;
  } else {
    o.result["expected_win_rate"] = nullptr;
  }
  o.result["matches_expected"] = expected ? Json(o.pass) : Json(nullptr);
  return o;
}

Outcome cmd_secure(ExperimentConfig& c) {
  if (c.scheme != "prp" && c.scheme != "block") throw InvalidArgument("secure needs a prp or block scheme");
  if (c.family != "ideal" && c.family != "feistel") throw InvalidArgument("secure needs an ideal or feistel family");
  if (c.scheme == "prp") c.mu = 1;
  const auto run = run_attack(c, true);
  if (!games::uses_type2_access(run.game)) throw InvalidArgument("secure requires qind or gqind");

  const std::uint64_t t_size =
      static_cast<std::uint64_t>(c.queries) * static_cast<std::uint64_t>(c.mu) * dimension_of(c.m);
  const double bound = channels::corollary_bound(c.m, c.tau, t_size);
  const double applicable = c.mu * bound;
  const double limit = applicable + run.estimate.advantage_half_width;

  Outcome o;
  o.result["attack"] = run.spec.name;
  o.result["game"] = games::to_string(run.game);
  o.result["scheme"] = scheme_json(run.scheme);
  o.result.update(estimate_json(run.estimate));
  o.result["bound"] = {{"queries", c.queries},
                       {"t_size", t_size},
                       {"corollary_bound", bound},
                       {"mu", c.mu},
                       {"applicable_bound", applicable},
                       {"vacuous", applicable >= 1.0},
                       {"limit", limit},
                       {"margin", limit - std::abs(run.estimate.advantage)}};
  o.pass = std::abs(run.estimate.advantage) <= limit;
  return o;
}

Outcome cmd_lemma(ExperimentConfig& c) {
  check_mode(c);
  if (c.mode == "sampled" && c.perm_samples == 0) throw InvalidArgument("perm-samples must be at least 1");
  resolve_seed(c, c.mode == "sampled");
  const auto mode = c.mode == "exact" ? channels::ChannelMode::Exhaustive : channels::ChannelMode::Sampled;
  if (c.m < 1 || c.tau < 0) throw InvalidArgument("lemma needs m >= 1 and tau >= 0");
  if (2 * c.m + c.tau > quantum::kMaxWires) throw InvalidArgument("2m + tau exceeds the simulator cap");
  const auto taken = channels::taken_outputs(c.m, c.tau, c.t_size);
  const auto r = channels::certify_corollary_bound(c.m, c.tau, taken, {mode, c.perm_samples, c.samples, *c.seed});

  Outcome o;
  Json& j = o.result;
  j["m"] = r.m;
  j["tau"] = r.tau;
  j["t_size"] = r.t_size;
  j["mode"] = mode == channels::ChannelMode::Exhaustive ? "exhaustive" : "sampled";
  j["perm_samples"] = r.perm_samples;
  j["inputs"] = r.inputs;
  j["max_trace_norm"] = r.max_trace_norm;
  j["max_trace_distance"] = r.max_trace_distance;
  j["entangled_trace_norm"] = r.entangled_trace_norm;
  j["bound"] = r.bound;
  j["margin"] = r.margin;
  j["vacuous"] = r.vacuous;
  j["bound_holds"] = r.pass;
  o.pass = r.pass;
  if (r.chi_c_eigenvalues) {
    // Off-diagonal block c (J - I) on the free outputs, zero on the taken ones.
    const double free = std::ldexp(1.0, c.m + c.tau) - static_cast<double>(c.t_size);
    const double coeff = 1.0 / (free * (free - 1.0));
    std::vector<double> expected(static_cast<std::size_t>(free) - 1, -coeff);
    expected.insert(expected.end(), static_cast<std::size_t>(c.t_size), 0.0);
    expected.push_back((free - 1.0) * coeff);
    const double expected_norm = 2.0 / free;
    bool ok = expected.size() == r.chi_c_eigenvalues->size() &&
              std::abs(*r.chi_c_trace_norm - expected_norm) <= 1e-10;
    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
      ok = std::abs((*r.chi_c_eigenvalues)[i] - expected[i]) <= 1e-10;
    }
    j["chi_c_eigenvalues"] = *r.chi_c_eigenvalues;
    j["chi_c_trace_norm"] = *r.chi_c_trace_norm;
    j["chi_c_largest_eigenvalue"] = r.chi_c_eigenvalues->back();
    j["chi_c_expected"] = {{"c", coeff}, {"eigenvalues", expected}, {"trace_norm", expected_norm}};
    j["chi_c_matches"] = ok;
    o.pass = o.pass && ok;
  }
  return o;
}

Outcome cmd_equiv(ExperimentConfig& c) {
  if (c.m > 3 || c.tau > 3) throw InvalidArgument("equiv needs m <= 3 and tau <= 3");
  if (c.keys < 1) throw InvalidArgument("keys must be at least 1");
  resolve_seed(c, false);
  const auto scheme = build_scheme(c);
  const auto report = check_equivalence(scheme, c.keys, *c.seed);
  Outcome o;
  o.result["scheme"] = scheme_json(scheme);
  Json cases = Json::array();
  for (const auto& k : report.cases) {
    cases.push_back({{"key", k.key},
                     {"randomness_values", k.randomness_values},
                     {"type1_deviation", k.type1_deviation},
                     {"type2_deviation", k.type2_deviation},
                     {"adjoint_decrypts", k.adjoint_decrypts}});
  }
  o.result["keys"] = cases;
  o.result["max_deviation"] = report.max_deviation;
  o.result["tolerance"] = kEquivalenceTolerance;
  o.result["adjoint_decrypts"] = report.adjoint_decrypts;
  o.pass = report.pass;
  return o;
}

Outcome cmd_suite(ExperimentConfig& c, Json& timing, std::ostream& err) {
  check_jobs(c);
  AcceptanceOptions options;
  options.jobs = c.jobs;
  options.on_result = [&err](const CriterionResult& r) {
    err << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << '\n';
  };
  const auto report = run_acceptance(options);
  Outcome o;
  Json criteria = Json::array();
  Json seconds = Json::object();
  int passed = 0;
  for (const auto& r : report.criteria) {
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    seconds[std::to_string(r.id)] = r.seconds;
    passed += r.pass ? 1 : 0;
  }
  o.result["criteria"] = criteria;
  o.result["passed"] = passed;
  o.result["total"] = report.criteria.size();
  o.pass = report.pass;
  timing["criteria_seconds"] = seconds;
  return o;
}

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object() || j.is_array()) {
    std::size_t i = 0;
    for (const auto& item : j.items()) {
      const std::string key = j.is_array() ? std::to_string(i++) : item.key();
      flatten(item.value(), path.empty() ? key : path + "." + key, os);
    }
    return;
  }
  std::string value = j.is_string() ? j.get<std::string>() : j.dump();
  if (value.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : value) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    value = quoted + "\"";
  }
  os << path << ',' << value << '\n';
}

}  // namespace

std::string flatten_csv(const Json& doc) {
  std::ostringstream os;
  os << "field,value\n";
  flatten(doc, "", os);
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Flags f;
  CLI::App app{"Simulator for quantum indistinguishability games", "qindlab"};
  app.set_version_flag("--version", QINDLAB_VERSION);
  app.require_subcommand(1);

  auto* attack = app.add_subcommand("attack", "Run an adversary in a security game");
  add_scheme_flags(attack, f);
  add_game_flags(attack, f);
  add_output_flags(attack, f);

  auto* secure = app.add_subcommand("secure", "Compare an adversary on a prp or block scheme with the security bound");
  add_scheme_flags(secure, f);
  add_game_flags(secure, f);
  add_output_flags(secure, f);

  auto* lemma = app.add_subcommand("lemma", "Certify the averaged-permutation channel bound");
  lemma->add_option("--m", f.m, "Input qubits");
  lemma->add_option("--tau", f.tau, "Extra output qubits");
  lemma->add_option("--mode", f.mode, "sampled | exact (exhaustive over permutations)");
  lemma->add_option("--samples", f.samples, "Random purified inputs besides the maximally entangled one");
  lemma->add_option("--perm-samples", f.perm_samples, "Sampled permutations");
  lemma->add_option("--t-size", f.t_size, "Number of excluded outputs");
  lemma->add_option("--seed", f.seed, "Master seed (falls back to QINDLAB_SEED)");
  add_output_flags(lemma, f);

  auto* equiv = app.add_subcommand("equiv", "Check that type-1 and type-2 oracles build each other");
  add_scheme_flags(equiv, f);
  equiv->add_option("--keys", f.keys, "Sampled keys");
  equiv->add_option("--seed", f.seed, "Seed for the key sampler");
  add_output_flags(equiv, f);

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--jobs", f.jobs, "Worker threads");
  add_output_flags(suite, f);

  std::vector<const char*> argv{"qindlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  ExperimentConfig c;
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "secure") {
    c.scheme = "prp";
    c.name = "qlp";
    c.force = true;
  }

  Json timing = Json::object();
  Outcome outcome;
  try {
    if (f.config) {
      std::ifstream in(*f.config);
      if (!in) throw InvalidArgument("cannot read config file " + *f.config);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument("config file is not valid JSON: " + std::string(e.what()));
      }
      apply_json(c, doc);
    }
    merge_flags(f, c);
    if (c.command == "attack") outcome = cmd_attack(c);
    if (c.command == "secure") outcome = cmd_secure(c);
    if (c.command == "lemma") outcome = cmd_lemma(c);
    if (c.command == "equiv") outcome = cmd_equiv(c);
    if (c.command == "suite") outcome = cmd_suite(c, timing, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoCoreDecomposition& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }

  Json doc;
  doc["schema"] = 1;
  doc["artifact_version"] = QINDLAB_VERSION;
  doc["command"] = c.command;
  doc["config"] = to_json(c);
  doc["result"] = outcome.result;
  doc["pass"] = outcome.pass;
  if (!f.no_timing) {
    timing["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    doc["timing"] = timing;
  }
  const std::string text = f.csv ? flatten_csv(doc) : doc.dump(2) + "\n";
  if (f.out) {
    std::ofstream file(*f.out);
    if (!file) {
      err << "error: cannot write " << *f.out << '\n';
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return outcome.pass ? kExitPass : kExitViolation;
}

}  // namespace qindlab::cli
