#include "qindlab/channels/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qindlab/common/error.hpp"

namespace qindlab::channels {

using quantum::StateVector;

namespace {

void check_sizes(int m, int tau) {
  if (m < 1 || tau < 0) throw InvalidArgument("channel needs m >= 1 and tau >= 0");
  if (2 * m + tau > quantum::kMaxWires) {
    throw InvalidArgument("reference plus channel output exceeds the simulator cap");
  }
}

Eigen::Index dim(int wires) { return static_cast<Eigen::Index>(dimension_of(wires)); }

// Number of injections of 2^m inputs into `free` outputs, saturating.
std::uint64_t injection_count(std::uint64_t free, std::uint64_t inputs) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < inputs; ++i) {
    const std::uint64_t factor = free - i;
    if (total > kMaxExhaustiveTerms / factor + 1) return kMaxExhaustiveTerms + 1;
    total *= factor;
  }
  return total;
}

void enumerate_injections(const std::vector<Word>& free, std::size_t inputs, std::vector<Word>& prefix,
                          std::vector<bool>& used, std::vector<QuantumChannel::Term>& out, double weight) {
  if (prefix.size() == inputs) {
    out.push_back({weight, prefix});
    return;
  }
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    prefix.push_back(free[i]);
    enumerate_injections(free, inputs, prefix, used, out, weight);
    prefix.pop_back();
    used[i] = false;
  }
}

}  // namespace

QuantumChannel QuantumChannel::mixture(int m, int tau, std::vector<Term> terms) {
  check_sizes(m, tau);
  if (terms.empty()) throw InvalidArgument("channel mixture has no terms");
  const Word inputs = dimension_of(m);
  const Word outputs = dimension_of(m + tau);
  double total = 0.0;
  for (const auto& t : terms) {
    if (!(t.weight >= 0.0 && t.weight <= 1.0)) throw InvalidArgument("term weight outside [0, 1]");
    if (t.injection.size() != inputs) throw InvalidArgument("injection must cover every input");
    std::vector<bool> hit(static_cast<std::size_t>(outputs), false);
    for (Word y : t.injection) {
      if (y >= outputs || hit[static_cast<std::size_t>(y)]) throw InvalidArgument("term is not injective");
      hit[static_cast<std::size_t>(y)] = true;
    }
    total += t.weight;
  }
  if (std::abs(total - 1.0) > quantum::kTolerance) throw InvalidArgument("term weights do not sum to 1");

  QuantumChannel ch(m, tau);
  ch.blocks_.assign(static_cast<std::size_t>(inputs * inputs), Matrix::Zero(dim(m + tau), dim(m + tau)));
  for (const auto& t : terms) {
    for (Word x = 0; x < inputs; ++x) {
      for (Word xp = 0; xp < inputs; ++xp) {
        ch.blocks_[static_cast<std::size_t>(x * inputs + xp)](static_cast<Eigen::Index>(t.injection[x]),
                                                            static_cast<Eigen::Index>(t.injection[xp])) +=
            t.weight;
      }
    }
  }
  ch.terms_ = std::move(terms);
  return ch;
}

QuantumChannel QuantumChannel::constant(int m, int tau, const Matrix& output) {
  check_sizes(m, tau);
  const DensityMatrix checked(m + tau, output);
  const Word inputs = dimension_of(m);
  QuantumChannel ch(m, tau);
  ch.blocks_.assign(static_cast<std::size_t>(inputs * inputs), Matrix::Zero(dim(m + tau), dim(m + tau)));
  for (Word x = 0; x < inputs; ++x) ch.blocks_[static_cast<std::size_t>(x * inputs + x)] = checked.matrix();
  return ch;
}

const Matrix& QuantumChannel::block(Word x, Word x_prime) const {
  const Word inputs = dimension_of(m_);
  if (x >= inputs || x_prime >= inputs) throw InvalidArgument("block index outside input space");
  return blocks_[static_cast<std::size_t>(x * inputs + x_prime)];
}

std::vector<Word> free_outputs(int m, int tau, const std::vector<Word>& excluded) {
  const Word outputs = dimension_of(m + tau);
  std::vector<bool> taken(static_cast<std::size_t>(outputs), false);
  for (Word t : excluded) {
    if (t >= outputs) throw InvalidArgument("excluded output outside {0,1}^{m+tau}");
    if (taken[static_cast<std::size_t>(t)]) throw InvalidArgument("excluded output listed twice");
    taken[static_cast<std::size_t>(t)] = true;
  }
  std::vector<Word> free;
  for (Word y = 0; y < outputs; ++y) {
    if (!taken[static_cast<std::size_t>(y)]) free.push_back(y);
  }
  return free;
}

QuantumChannel avg_permutation_channel(int m, int tau, const std::vector<Word>& excluded) {
  check_sizes(m, tau);
  const auto free = free_outputs(m, tau, excluded);
  const Word inputs = dimension_of(m);
  if (free.size() < inputs) throw InvalidArgument("excluded set leaves fewer free outputs than inputs");
  const std::uint64_t count = injection_count(free.size(), inputs);
  if (count > kMaxExhaustiveTerms) {
    throw InvalidArgument("exhaustive channel needs more than " + std::to_string(kMaxExhaustiveTerms) +
                          " terms; use sampled mode");
  }
  std::vector<QuantumChannel::Term> terms;
  terms.reserve(static_cast<std::size_t>(count));
  std::vector<Word> prefix;
  std::vector<bool> used(free.size(), false);
  enumerate_injections(free, static_cast<std::size_t>(inputs), prefix, used, terms,
                       1.0 / static_cast<double>(count));
  return QuantumChannel::mixture(m, tau, std::move(terms));
}

QuantumChannel avg_permutation_channel(int m, int tau, const std::vector<Word>& excluded,
                                       std::uint64_t perm_samples, Rng& rng) {
  check_sizes(m, tau);
  if (perm_samples == 0) throw InvalidArgument("sampled channel needs at least one permutation");
  const auto free = free_outputs(m, tau, excluded);
  const Word inputs = dimension_of(m);
  if (free.size() < inputs) throw InvalidArgument("excluded set leaves fewer free outputs than inputs");
  std::vector<QuantumChannel::Term> terms;
  terms.reserve(static_cast<std::size_t>(perm_samples));
  const double w = 1.0 / static_cast<double>(perm_samples);
  std::vector<Word> pool = free;
  for (std::uint64_t s = 0; s < perm_samples; ++s) {
    // Partial Fisher-Yates: the first 2^m entries of a uniform shuffle.
    for (Word i = 0; i < inputs; ++i) {
      const Word j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    terms.push_back({w, std::vector<Word>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(inputs))});
  }
  return QuantumChannel::mixture(m, tau, std::move(terms));
}

QuantumChannel constant_mixed_channel(int m, int tau, const std::vector<Word>& excluded) {
  check_sizes(m, tau);
  const auto free = free_outputs(m, tau, excluded);
  if (free.empty()) throw InvalidArgument("excluded set covers every output");
  Matrix out = Matrix::Zero(dim(m + tau), dim(m + tau));
  for (Word y : free) out(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(y)) = 1.0 / static_cast<double>(free.size());
  return QuantumChannel::constant(m, tau, out);
}

DensityMatrix apply_channel_bipartite(const QuantumChannel& ch, const DensityMatrix& input, int reference_wires) {
  const int m = ch.input_wires();
  if (reference_wires < 0 || input.num_wires() != reference_wires + m) {
    throw InvalidArgument("input must hold the reference wires followed by the channel's m wires");
  }
  const Eigen::Index d = dim(m);
  const Eigen::Index r = dim(reference_wires);
  const Eigen::Index n = dim(ch.output_wires());
  const Matrix& rho = input.matrix();
  Matrix out = Matrix::Zero(r * n, r * n);
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index xp = 0; xp < d; ++xp) {
      const Matrix& a = ch.block(static_cast<Word>(x), static_cast<Word>(xp));
      for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < r; ++j) {
          const quantum::Complex c = rho(i * d + x, j * d + xp);
          if (c == quantum::Complex(0.0, 0.0)) continue;
          out.block(i * n, j * n, n, n) += c * a;
        }
      }
    }
  }
  return DensityMatrix(reference_wires + ch.output_wires(), std::move(out));
}

std::vector<Word> taken_outputs(int m, int tau, std::uint64_t count) {
  const Word inputs = dimension_of(m);
  if (count > dimension_of(m + tau) - inputs) throw InvalidArgument("too many taken outputs");
  std::vector<Word> out;
  for (Word r = 1; out.size() < count; ++r) {
    for (Word x = 0; x < inputs && out.size() < count; ++x) out.push_back(concat(x, r, tau));
  }
  return out;
}

double corollary_bound(int m, int tau, std::uint64_t t_size) {
  const double denominator = std::ldexp(1.0, tau) - static_cast<double>(t_size) / std::ldexp(1.0, m);
  if (!(denominator > 0.0)) {
    throw InvalidArgument("corollary bound undefined: 2^tau must exceed |T| / 2^m");
  }
  return 4.0 / denominator;
}

double lemma_bound(int tau) { return std::ldexp(1.0, 2 - tau); }

BoundReport certify_lemma_bound(int m, int tau, const CertifyOptions& options) {
  return certify_corollary_bound(m, tau, {}, options);
}

BoundReport certify_corollary_bound(int m, int tau, const std::vector<Word>& excluded,
                                    const CertifyOptions& options) {
  BoundReport report;
  report.m = m;
  report.tau = tau;
  report.t_size = excluded.size();
  report.mode = options.mode;
  report.seed = options.seed;
  report.bound = corollary_bound(m, tau, excluded.size());
  report.vacuous = report.bound >= 1.0;

  Rng channel_rng(derive_seed(options.seed, 0));
  Rng input_rng(derive_seed(options.seed, 1));
  const QuantumChannel e = options.mode == ChannelMode::Exhaustive
                               ? avg_permutation_channel(m, tau, excluded)
                               : avg_permutation_channel(m, tau, excluded, options.perm_samples, channel_rng);
  report.perm_samples = options.mode == ChannelMode::Exhaustive ? 0 : options.perm_samples;
  const QuantumChannel t = constant_mixed_channel(m, tau, excluded);

  auto distance = [&](const StateVector& phi) {
    const DensityMatrix rho = DensityMatrix::from_pure(phi);
    const Matrix diff = apply_channel_bipartite(e, rho, m).matrix() - apply_channel_bipartite(t, rho, m).matrix();
    return quantum::trace_norm(diff);
  };

  report.entangled_trace_norm = distance(quantum::maximally_entangled(m));
  report.max_trace_norm = report.entangled_trace_norm;
  for (std::uint64_t i = 0; i < options.input_samples; ++i) {
    report.max_trace_norm = std::max(report.max_trace_norm, distance(quantum::random_pure_bipartite(m, m, input_rng)));
  }
  report.inputs = options.input_samples + 1;
  report.max_trace_distance = 0.5 * report.max_trace_norm;
  report.margin = report.bound - report.max_trace_norm;
  report.pass = report.max_trace_norm <= report.bound;

  if (options.mode == ChannelMode::Exhaustive) {
    const Matrix& chi_c = e.block(0, 1);
    report.chi_c_eigenvalues = quantum::hermitian_eigenvalues(chi_c);
    report.chi_c_trace_norm = quantum::trace_norm(chi_c);
  }
  return report;
}

}  // namespace qindlab::channels
