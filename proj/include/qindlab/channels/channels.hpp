#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qindlab/common/rng.hpp"
#include "qindlab/quantum/state.hpp"

namespace qindlab::channels {

using quantum::DensityMatrix;
using quantum::Matrix;

// Channel from m qubits to m + tau qubits, either a weighted mixture of
// "attach |0^tau>, then permute the basis" maps or a constant output.
//
// Only the images of the 2^m inputs x || 0^tau matter, so each mixture term
// stores that injection. The channel is summarized by the blocks
// A(x, x') = sum_t w_t |pi_t(x)><pi_t(x')|, from which the action on any
// bipartite input follows.
class QuantumChannel {
 public:
  struct Term {
    double weight;
    std::vector<Word> injection;  // injection[x] = pi(x || 0^tau)
  };

  static QuantumChannel mixture(int m, int tau, std::vector<Term> terms);
  // Constant channel onto `output` (a density matrix on m + tau wires).
  static QuantumChannel constant(int m, int tau, const Matrix& output);

  int input_wires() const { return m_; }
  int output_wires() const { return m_ + tau_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  const Matrix& block(Word x, Word x_prime) const;

 private:
  QuantumChannel(int m, int tau) : m_(m), tau_(tau) {}

  int m_;
  int tau_;
  std::vector<Term> terms_;
  std::vector<Matrix> blocks_;
};

// Complement of `excluded` in {0,1}^{m+tau}, ascending. Rejects entries out of
// range and duplicates.
std::vector<Word> free_outputs(int m, int tau, const std::vector<Word>& excluded);

// Uniform average over all basis permutations whose images of the inputs
// x || 0^tau avoid `excluded`. Enumerates every injection; throws
// InvalidArgument when there are more than kMaxExhaustiveTerms of them.
inline constexpr std::uint64_t kMaxExhaustiveTerms = 2'000'000;
QuantumChannel avg_permutation_channel(int m, int tau, const std::vector<Word>& excluded);

// Same channel estimated from `perm_samples` uniformly drawn permutations.
QuantumChannel avg_permutation_channel(int m, int tau, const std::vector<Word>& excluded,
                                       std::uint64_t perm_samples, Rng& rng);

// Constant channel onto the uniform mixture over the free outputs.
QuantumChannel constant_mixed_channel(int m, int tau, const std::vector<Word>& excluded);

// Input on reference_wires + m wires (reference first); identity on the
// reference, `ch` on the rest.
DensityMatrix apply_channel_bipartite(const QuantumChannel& ch, const DensityMatrix& input,
                                      int reference_wires);

// The first `count` strings of the form x || r with r = 1, 2, ... (x fastest):
// the outputs a challenger has already produced after count / 2^m queries.
std::vector<Word> taken_outputs(int m, int tau, std::uint64_t count);

// 4 / (2^tau - t_size / 2^m); throws InvalidArgument unless the denominator
// is positive.
double corollary_bound(int m, int tau, std::uint64_t t_size);
// 2^{-tau+2}
double lemma_bound(int tau);

enum class ChannelMode { Exhaustive, Sampled };

struct CertifyOptions {
  ChannelMode mode = ChannelMode::Sampled;
  std::uint64_t perm_samples = 5000;
  // Random purified inputs; the maximally entangled input is added on top.
  std::uint64_t input_samples = 500;
  std::uint64_t seed = 0;
};

struct BoundReport {
  int m = 0;
  int tau = 0;
  std::uint64_t t_size = 0;
  ChannelMode mode = ChannelMode::Sampled;
  std::uint64_t perm_samples = 0;
  std::uint64_t inputs = 0;
  std::uint64_t seed = 0;
  // Over all tested inputs rho: max of ||(id x E)(rho) - (id x T)(rho)||_tr
  // and of half that (the trace distance).
  double max_trace_norm = 0.0;
  double max_trace_distance = 0.0;
  // Value on the maximally entangled input.
  double entangled_trace_norm = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  // The bound says nothing when it is at least 1.
  bool vacuous = false;
  bool pass = false;
  // Exhaustive mode only: spectrum (ascending) and trace norm of the
  // off-diagonal block chi_C = A(0, 1).
  std::optional<std::vector<double>> chi_c_eigenvalues;
  std::optional<double> chi_c_trace_norm;
};

// pass iff max_trace_norm <= bound (which implies the same for the trace
// distance).
BoundReport certify_lemma_bound(int m, int tau, const CertifyOptions& options);
BoundReport certify_corollary_bound(int m, int tau, const std::vector<Word>& excluded,
                                    const CertifyOptions& options);

}  // namespace qindlab::channels
