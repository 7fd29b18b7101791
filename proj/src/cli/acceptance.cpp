#include "qindlab/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "qindlab/attacks/attacks.hpp"
#include "qindlab/common/error.hpp"
#include "qindlab/channels/channels.hpp"
#include "qindlab/games/advantage.hpp"
#include "qindlab/oracles/encryption_unitary.hpp"
#include "qindlab/quantum/circuit.hpp"

namespace qindlab::cli {

using games::EstimateOptions;
using games::EvalMode;
using games::GameSettings;
using games::GameVariant;
using quantum::Matrix;
using schemes::SchemePtr;

EquivalenceReport check_equivalence(const SchemePtr& scheme, int keys, std::uint64_t seed) {
  if (keys < 1) throw InvalidArgument("equivalence check needs at least one key");
  EquivalenceReport report;
  Rng rng(seed);
  const int tau = scheme->randomness_bits();
  const int shift = scheme->ancilla_bits();
  const bool all_r = tau <= 3;
  for (int i = 0; i < keys; ++i) {
    EquivalenceCase c;
    c.key = scheme->gen(rng);
    std::vector<Word> rs;
    if (all_r) {
      for (Word r = 0; r < dimension_of(tau); ++r) rs.push_back(r);
    } else {
      rs.push_back(rng.bits(tau));
    }
    c.randomness_values = rs.size();
    for (Word r : rs) {
      const auto u1 = oracles::type1_unitary(scheme, c.key, r);
      const auto u1_dec = oracles::type1_decryption_unitary(scheme, c.key, r);
      const auto u2 = oracles::type2_unitary(scheme, c.key, r);
      c.type1_deviation =
          std::max(c.type1_deviation, quantum::max_entry_deviation(oracles::type1_from_type2(u2).matrix(), u1.matrix()));
      c.type2_deviation = std::max(c.type2_deviation,
                                   quantum::max_entry_deviation(oracles::type2_from_type1(u1, u1_dec),
                                                                oracles::ancilla_zero_restriction(u2)));
      const auto u2_dagger = oracles::adjoint(u2);
      const Matrix dagger = u2.matrix().adjoint();
      for (Word x = 0; x < dimension_of(scheme->message_bits()); ++x) {
        const Word y = scheme->enc(c.key, r, x);
        const Word expected = x << shift;
        const bool ok = u2_dagger.permutation(y) == expected &&
                        std::abs(dagger(static_cast<Eigen::Index>(expected), static_cast<Eigen::Index>(y)) -
                                 quantum::Complex(1.0, 0.0)) <= kEquivalenceTolerance;
        c.adjoint_decrypts = c.adjoint_decrypts && ok;
      }
    }
    report.max_deviation = std::max({report.max_deviation, c.type1_deviation, c.type2_deviation});
    report.adjoint_decrypts = report.adjoint_decrypts && c.adjoint_decrypts;
    report.cases.push_back(c);
  }
  report.pass = report.max_deviation <= kEquivalenceTolerance && report.adjoint_decrypts;
  return report;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Joined detail text without the trailing separator.
std::string finish(const std::ostringstream& detail) {
  std::string text = detail.str();
  while (!text.empty() && (text.back() == ' ' || text.back() == ';')) text.pop_back();
  return text;
}

SchemePtr prf_for(int m, int tau) { return schemes::prf_scheme(m, tau, schemes::feistel_prf(tau, m)); }
SchemePtr prp_for(int m, int tau) { return schemes::prp_scheme(m, tau, schemes::ideal_prp_family(m + tau)); }

CriterionResult bz_exactness(int jobs) {
  const auto start = Clock::now();
  CriterionResult res{1, "Entanglement attack exactness", true, "", 0.0, 10.0};
  std::ostringstream detail;
  for (int m = 1; m <= 4; ++m) {
    const auto est = games::estimate_advantage(GameVariant::FqindQcpa, prf_for(m, 1), attacks::bz_adversary(m),
                                               EstimateOptions{8, 101, EvalMode::Exact, jobs});
    const double expected = 1.0 - std::ldexp(1.0, -(m + 1));
    const double err = std::abs(est.win_rate - expected);
    res.pass = res.pass && err <= 1e-10;
    detail << "m=" << m << " exact " << est.win_rate << " (err " << err << "); ";
  }
  const auto sampled = games::estimate_advantage(GameVariant::FqindQcpa, prf_for(3, 1), attacks::bz_adversary(3),
                                                 EstimateOptions{10000, 103, EvalMode::Sampled, jobs});
  res.pass = res.pass && std::abs(sampled.win_rate - 0.9375) <= 0.015;
  res.seconds = seconds_since(start);
  res.pass = res.pass && res.seconds < 10.0;
  detail << "m=3 sampled " << sampled.win_rate << " over 10000 trials";
  res.detail = finish(detail);
  return res;
}

// Runs `factory` at every fixed (key, r) in both challenge phases, exactly and
// sampled; returns the smallest win probability seen and counts losses.
struct PerfectRun {
  double min_win_probability = 1.0;
  int cases = 0;
  int sampled_losses = 0;
};

PerfectRun perfect_run(const SchemePtr& scheme, const games::AdversaryFactory& factory, int keys,
                       std::uint64_t seed) {
  PerfectRun run;
  Rng key_rng(seed);
  std::uint64_t stream = 0;
  for (int k = 0; k < keys; ++k) {
    const auto key = scheme->gen(key_rng);
    for (Word r = 0; r < dimension_of(scheme->randomness_bits()); ++r) {
      for (GameVariant v : {GameVariant::QindQcpa, GameVariant::GqindQcpa}) {
        Rng exact_rng(derive_seed(seed, ++stream));
        const auto exact = games::run_game(v, scheme, factory, exact_rng, GameSettings{EvalMode::Exact, key, r});
        run.min_win_probability = std::min(run.min_win_probability, exact.win_probability);
        for (int t = 0; t < 4; ++t) {
          Rng rng(derive_seed(seed, ++stream));
          const auto sampled = games::run_game(v, scheme, factory, rng, GameSettings{EvalMode::Sampled, key, r});
          if (!sampled.win) ++run.sampled_losses;
        }
        ++run.cases;
      }
    }
  }
  return run;
}

CriterionResult impossibility() {
  const auto start = Clock::now();
  CriterionResult res{2, "Impossibility for quasi-length-preserving schemes", true, "", 0.0, 30.0};
  std::ostringstream detail;
  for (int m = 1; m <= 3; ++m) {
    const auto run = perfect_run(prf_for(m, 2), attacks::qlp_distinguisher(m), 8, 200 + m);
    res.pass = res.pass && std::abs(run.min_win_probability - 1.0) <= 1e-12 && run.sampled_losses == 0;
    detail << "m=" << m << ": " << run.cases << " (key, r, game) cases, min exact win " << run.min_win_probability
           << ", sampled losses " << run.sampled_losses << (m < 3 ? "; " : "");
  }
  res.seconds = seconds_since(start);
  res.pass = res.pass && res.seconds < 30.0;
  res.detail = finish(detail);
  return res;
}

CriterionResult separation(int jobs) {
  const auto start = Clock::now();
  CriterionResult res{3, "Single-bit separation attack", true, "", 0.0};
  std::ostringstream detail;
  for (int tau = 1; tau <= 2; ++tau) {
    const auto run = perfect_run(prf_for(1, tau), attacks::hadamard_bit_distinguisher(), 8, 300 + tau);
    res.pass = res.pass && std::abs(run.min_win_probability - 1.0) <= 1e-12 && run.sampled_losses == 0;
    detail << "tau=" << tau << ": min exact win " << run.min_win_probability << ", sampled losses "
           << run.sampled_losses << "; ";
  }
  const auto est = games::estimate_advantage(GameVariant::QindQcpa, prf_for(1, 2), attacks::hadamard_bit_distinguisher(),
                                             EstimateOptions{1000, 303, EvalMode::Sampled, jobs});
  res.pass = res.pass && est.wins == 1000.0;
  detail << "1000 sampled qIND trials, win rate " << est.win_rate;
  res.seconds = seconds_since(start);
  res.detail = finish(detail);
  return res;
}

CriterionResult lemma_spectrum() {
  const auto start = Clock::now();
  CriterionResult res{4, "Averaged-channel off-diagonal spectrum", true, "", 0.0};
  const int m = 1;
  const int tau = 1;
  const auto report = channels::certify_lemma_bound(m, tau, {channels::ChannelMode::Exhaustive, 0, 16, 4});
  const double n = std::ldexp(1.0, m + tau);
  const double c = 1.0 / (n * (n - 1.0));
  std::vector<double> expected(static_cast<std::size_t>(n) - 1, -c);
  expected.push_back((n - 1.0) * c);
  const auto& eig = *report.chi_c_eigenvalues;
  bool spectrum_ok = eig.size() == expected.size();
  for (std::size_t i = 0; spectrum_ok && i < eig.size(); ++i) spectrum_ok = std::abs(eig[i] - expected[i]) <= 1e-10;
  const double norm_expected = std::ldexp(1.0, -m - tau + 1);
  const bool norm_ok = std::abs(*report.chi_c_trace_norm - norm_expected) <= 1e-10 &&
                       std::abs(*report.chi_c_trace_norm - c * 2.0 * (n - 1.0)) <= 1e-10;
  res.pass = spectrum_ok && norm_ok;
  std::ostringstream detail;
  detail << "c = " << c << ", eigenvalues";
  for (double e : eig) detail << ' ' << e;
  detail << "; trace norm " << *report.chi_c_trace_norm << " (expected 2^{-m-tau+1} = " << norm_expected
         << "), largest eigenvalue " << eig.back();
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

channels::CertifyOptions lemma_options() {
  // 499 random inputs plus the maximally entangled one.
  return {channels::ChannelMode::Sampled, 5000, 499, 11};
}

CriterionResult lemma_consistency(channels::BoundReport& out) {
  const auto start = Clock::now();
  CriterionResult res{5, "Lemma bound consistency", true, "", 0.0, 60.0};
  out = channels::certify_lemma_bound(1, 3, lemma_options());
  res.seconds = seconds_since(start);
  res.pass = out.pass && out.bound == channels::lemma_bound(3) && out.inputs == 500 && res.seconds < 60.0;
  std::ostringstream detail;
  detail << "max trace norm " << out.max_trace_norm << " (trace distance " << out.max_trace_distance << ") <= bound "
         << out.bound << ", margin " << out.margin << ", " << out.inputs << " inputs, " << out.perm_samples
         << " permutations";
  res.detail = finish(detail);
  return res;
}

CriterionResult corollary_consistency(const channels::BoundReport& lemma) {
  const auto start = Clock::now();
  CriterionResult res{6, "Corollary bound consistency", true, "", 0.0};
  const auto taken = channels::taken_outputs(1, 3, 4);
  const auto with_t = channels::certify_corollary_bound(1, 3, taken, lemma_options());
  const auto without_t = channels::certify_corollary_bound(1, 3, {}, lemma_options());
  const bool bound_ok = with_t.bound == 4.0 / (8.0 - 4.0 / 2.0);
  const bool reproduces = without_t.bound == lemma.bound && without_t.max_trace_norm == lemma.max_trace_norm;
  res.pass = with_t.pass && bound_ok && reproduces;
  std::ostringstream detail;
  detail << "|T|=4: max trace norm " << with_t.max_trace_norm << " <= bound " << with_t.bound << ", margin "
         << with_t.margin << "; |T|=0 bound " << without_t.bound << (reproduces ? " reproduces" : " differs from")
         << " the lemma run";
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

CriterionResult construction1(int jobs) {
  const auto start = Clock::now();
  CriterionResult res{7, "Single-block prp scheme at desk scale", true, "", 0.0};
  const int m = 2;
  const int tau = 4;
  const int q = 2;
  const auto scheme = prp_for(m, tau);
  const double bound = channels::corollary_bound(m, tau, static_cast<std::uint64_t>(q) * dimension_of(m));
  const std::vector<std::pair<std::string, games::AdversaryFactory>> adversaries = {
      {"qlp (forced)", attacks::qlp_distinguisher(m, true)},
      {"hadamard-bit lifted", attacks::lifted_hadamard_bit_distinguisher(m)},
      {"random", attacks::random_guesser(m)}};
  std::ostringstream detail;
  detail << "bound " << bound << "; ";
  std::uint64_t seed = 700;
  for (const auto& [name, factory] : adversaries) {
    const auto est = games::estimate_advantage(GameVariant::QindQcpa, scheme, attacks::with_learning_queries(factory, q),
                                               EstimateOptions{5000, ++seed, EvalMode::Sampled, jobs});
    const bool ok = std::abs(est.advantage) <= bound + est.advantage_half_width;
    res.pass = res.pass && ok;
    detail << name << ": advantage " << est.advantage << " +/- " << est.advantage_half_width << "; ";
  }
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

CriterionResult construction2(int jobs) {
  const auto start = Clock::now();
  CriterionResult res{8, "Multi-block prp scheme", true, "", 0.0};
  const int m = 2;
  const int tau = 4;
  const int mu = 2;
  const int q = 2;
  const auto scheme = schemes::block_scheme(prp_for(m, tau), mu);
  const double bound =
      channels::corollary_bound(m, tau, static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(mu) * dimension_of(m));
  const auto est = games::estimate_advantage(
      GameVariant::GqindQcpa, scheme, attacks::with_learning_queries(attacks::entangled_block_adversary(m, mu), q),
      EstimateOptions{5000, 801, EvalMode::Sampled, jobs});
  res.pass = std::abs(est.advantage) <= mu * bound + est.advantage_half_width;
  std::ostringstream detail;
  detail << "entangled two-block gqIND: advantage " << est.advantage << " +/- " << est.advantage_half_width
         << ", mu * bound = " << mu * bound;
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

CriterionResult oracle_equivalence() {
  const auto start = Clock::now();
  CriterionResult res{9, "Type-1 / type-2 oracle equivalence", true, "", 0.0};
  std::ostringstream detail;
  const std::vector<std::pair<int, int>> sizes = {{1, 1}, {2, 1}, {2, 2}};
  for (const auto& [m, tau] : sizes) {
    for (const auto& scheme : {prf_for(m, tau), prp_for(m, tau)}) {
      const auto report = check_equivalence(scheme, 8, 900 + static_cast<std::uint64_t>(m * 10 + tau));
      res.pass = res.pass && report.max_deviation <= kEquivalenceTolerance;
      detail << scheme->name() << "(" << m << "," << tau << ") " << report.max_deviation << "; ";
    }
  }
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

CriterionResult adjoint_decryption() {
  const auto start = Clock::now();
  CriterionResult res{10, "Adjoint decryption identity", true, "", 0.0};
  std::ostringstream detail;
  for (const auto& scheme : {prf_for(2, 2), prp_for(2, 2)}) {
    const auto report = check_equivalence(scheme, 8, 1000);
    res.pass = res.pass && report.adjoint_decrypts;
    detail << scheme->name() << ": " << (report.adjoint_decrypts ? "holds" : "fails") << " for all x and r over 8 keys; ";
  }
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

using Property = std::pair<std::string, std::function<bool()>>;

std::vector<Property> property_battery(int jobs) {
  std::vector<Property> props;
  props.push_back({"gates preserve the norm", [] {
                     Rng rng(1101);
                     quantum::StateVector s = quantum::random_pure_bipartite(2, 3, rng);
                     std::vector<quantum::Gate> gates;
                     for (int i = 0; i < 40; ++i) {
                       const int t = static_cast<int>(rng.below(5));
                       const int c = static_cast<int>((t + 1 + rng.below(4)) % 5);
                       switch (rng.below(4)) {
                         case 0: gates.push_back(quantum::Gate::h(t)); break;
                         case 1: gates.push_back(quantum::Gate::x(t)); break;
                         case 2: gates.push_back(quantum::Gate::z(t)); break;
                         default: gates.push_back(quantum::Gate::cx(c, t));
                       }
                     }
                     s = quantum::apply_gates(gates, s);
                     s = quantum::apply_gates(quantum::inverse_gates(gates), s);
                     return std::abs(s.norm() - 1.0) <= 1e-9;
                   }});
  props.push_back({"H is an involution", [] {
                     const auto hh = quantum::hadamard() * quantum::hadamard();
                     return quantum::max_entry_deviation(hh.matrix(), Matrix::Identity(2, 2)) <= 1e-12;
                   }});
  props.push_back({"trace distance of |0> and |+>", [] {
                     const auto zero = quantum::DensityMatrix::from_pure(quantum::state_from_bits("0"));
                     const auto plus = quantum::DensityMatrix::from_pure(
                         quantum::apply_unitary(quantum::hadamard(), quantum::state_from_bits("0"), {0}));
                     return std::abs(quantum::trace_distance(zero, plus) - 1.0 / std::sqrt(2.0)) <= 1e-12;
                   }});
  props.push_back({"trace distance is a bounded symmetric metric", [] {
                     Rng rng(1102);
                     for (int i = 0; i < 20; ++i) {
                       const auto a = quantum::DensityMatrix::from_pure(quantum::random_pure_bipartite(1, 2, rng));
                       const auto b = quantum::DensityMatrix::from_pure(quantum::random_pure_bipartite(1, 2, rng));
                       const double d = quantum::trace_distance(a, b);
                       if (d < 0.0 || d > 1.0) return false;
                       if (std::abs(d - quantum::trace_distance(b, a)) > 1e-12) return false;
                       if (quantum::trace_distance(a, a) > 1e-9) return false;
                     }
                     return true;
                   }});
  props.push_back({"partial trace of a product state", [] {
                     Rng rng(1103);
                     const auto a = quantum::DensityMatrix::from_pure(quantum::random_pure_bipartite(1, 1, rng));
                     const auto b = quantum::DensityMatrix::maximally_mixed(1);
                     const auto kept = quantum::partial_trace(a.tensor(b), {0, 1});
                     return quantum::max_entry_deviation(kept.matrix(), a.matrix()) <= 1e-12;
                   }});
  props.push_back({"maximally mixed purity", [] {
                     return std::abs(quantum::DensityMatrix::maximally_mixed(3).purity() - 0.125) <= 1e-12;
                   }});
  props.push_back({"decryption inverts encryption", [] {
                     Rng rng(1104);
                     const std::vector<SchemePtr> all = {
                         prf_for(2, 2), schemes::prf_scheme(2, 2, schemes::feistel_prf(2, 2), 1), prp_for(2, 2),
                         schemes::prp_scheme(2, 2, schemes::feistel_prp_family(4, 4)),
                         schemes::block_scheme(prp_for(2, 2), 2)};
                     for (const auto& s : all) {
                       for (int k = 0; k < 4; ++k) {
                         const auto key = s->gen(rng);
                         for (Word x = 0; x < dimension_of(s->message_bits()); ++x) {
                           if (s->dec(key, s->enc(key, rng.bits(s->randomness_bits()), x)) != x) return false;
                         }
                       }
                     }
                     return true;
                   }});
  props.push_back({"Feistel rounds give a bijection", [] {
                     const auto f = schemes::feistel_prp_family(6, 4);
                     Rng rng(1105);
                     const auto key = f->gen(rng);
                     std::vector<bool> seen(64, false);
                     for (Word x = 0; x < 64; ++x) {
                       const Word y = f->forward(key, x);
                       if (y >= 64 || seen[y] || f->inverse(key, y) != x) return false;
                       seen[y] = true;
                     }
                     return true;
                   }});
  props.push_back({"oracles are unitary permutations", [] {
                     Rng rng(1106);
                     for (const auto& s : {prf_for(1, 2), prp_for(2, 1)}) {
                       const auto key = s->gen(rng);
                       const Word r = rng.bits(s->randomness_bits());
                       for (const auto& u : {oracles::type1_unitary(s, key, r), oracles::type2_unitary(s, key, r)}) {
                         const Matrix mat = u.matrix();
                         if (!oracles::is_permutation_matrix(mat)) return false;
                         if (quantum::max_entry_deviation(mat * mat.adjoint(), Matrix::Identity(mat.rows(), mat.cols())) > 1e-12) {
                           return false;
                         }
                       }
                     }
                     return true;
                   }});
  props.push_back({"averaged channel outputs unit-trace states", [] {
                     Rng rng(1107);
                     const auto e = channels::avg_permutation_channel(1, 1, {});
                     const auto rho = quantum::DensityMatrix::from_pure(quantum::random_pure_bipartite(1, 1, rng));
                     const auto out = channels::apply_channel_bipartite(e, rho, 1);
                     return std::abs(out.matrix().trace() - quantum::Complex(1.0, 0.0)) <= 1e-12;
                   }});
  props.push_back({"estimates do not depend on the thread count", [jobs] {
                     const auto scheme = prf_for(2, 1);
                     const auto one = games::estimate_advantage(GameVariant::FqindQcpa, scheme, attacks::bz_adversary(2),
                                                                EstimateOptions{200, 1108, EvalMode::Sampled, 1});
                     const auto many = games::estimate_advantage(GameVariant::FqindQcpa, scheme, attacks::bz_adversary(2),
                                                                 EstimateOptions{200, 1108, EvalMode::Sampled, std::max(3, jobs)});
                     return one.wins == many.wins;
                   }});
  props.push_back({"blind guessing wins half the time exactly", [] {
                     const auto est = games::estimate_advantage(GameVariant::QindQcpa, prp_for(2, 2), attacks::random_guesser(2),
                                                                EstimateOptions{16, 1109, EvalMode::Exact, 1});
                     return std::abs(est.win_rate - 0.5) <= 1e-12;
                   }});
  props.push_back({"corollary bound grows with |T| from the lemma bound", [] {
                     double prev = channels::corollary_bound(2, 4, 0);
                     if (prev != channels::lemma_bound(4)) return false;
                     for (std::uint64_t t = 1; t < 60; ++t) {
                       const double next = channels::corollary_bound(2, 4, t);
                       if (!(next > prev)) return false;
                       prev = next;
                     }
                     return true;
                   }});
  props.push_back({"Hoeffding half-width", [] {
                     return std::abs(games::hoeffding_half_width(10000) - std::sqrt(std::log(200.0) / 20000.0)) <= 1e-15;
                   }});
  return props;
}

CriterionResult property_suite(int jobs, Clock::time_point suite_start) {
  const auto start = Clock::now();
  CriterionResult res{11, "Property suite and total runtime", true, "", 0.0, 300.0};
  std::ostringstream detail;
  int passed = 0;
  const auto props = property_battery(jobs);
  for (const auto& [name, check] : props) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      detail << name << " threw: " << e.what() << "; ";
    }
    if (ok) {
      ++passed;
    } else {
      res.pass = false;
      detail << "failed: " << name << "; ";
    }
  }
  const double total = seconds_since(suite_start);
  res.pass = res.pass && total < 300.0;
  detail << passed << "/" << props.size() << " properties hold";
  res.detail = finish(detail);
  res.seconds = seconds_since(start);
  return res;
}

}  // namespace

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  const auto start = Clock::now();
  AcceptanceReport report;
  const int jobs = std::max(1, options.jobs);
  channels::BoundReport lemma;
  const std::vector<std::function<CriterionResult()>> criteria = {
      [&] { return bz_exactness(jobs); },
      [&] { return impossibility(); },
      [&] { return separation(jobs); },
      [&] { return lemma_spectrum(); },
      [&] { return lemma_consistency(lemma); },
      [&] { return corollary_consistency(lemma); },
      [&] { return construction1(jobs); },
      [&] { return construction2(jobs); },
      [&] { return oracle_equivalence(); },
      [&] { return adjoint_decryption(); },
      [&] { return property_suite(jobs, start); },
  };
  report.pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    CriterionResult res;
    try {
      res = criteria[i]();
    } catch (const std::exception& e) {
      res = {static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false, std::string("threw: ") + e.what(),
             seconds_since(t0)};
    }
    report.pass = report.pass && res.pass;
    if (options.on_result) options.on_result(res);
    report.criteria.push_back(std::move(res));
  }
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace qindlab::cli
