#include <cmath>
#include <numeric>
#include <string>

#include "qindlab/common/error.hpp"
#include "qindlab/quantum/state.hpp"
#include "wire_offsets.hpp"

namespace qindlab::quantum {

namespace {

void check_wire_count(int num_wires) {
  if (num_wires < 1 || num_wires > kMaxWires) {
    throw InvalidArgument("register width " + std::to_string(num_wires) +
                          " outside [1, " + std::to_string(kMaxWires) + "]");
  }
}

}  // namespace

Wires wire_range(int first, int count) {
  Wires out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), first);
  return out;
}

void check_wires(const Wires& wires, int total) {
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  for (int w : wires) {
    if (w < 0 || w >= total) {
      throw InvalidArgument("wire " + std::to_string(w) + " outside register of " +
                            std::to_string(total));
    }
    if (seen[static_cast<std::size_t>(w)]) {
      throw InvalidArgument("wire " + std::to_string(w) + " listed twice");
    }
    seen[static_cast<std::size_t>(w)] = true;
  }
}

StateVector::StateVector(int num_wires, Vector amplitudes)
    : num_wires_(num_wires), amplitudes_(std::move(amplitudes)) {
  check_wire_count(num_wires);
  if (static_cast<Word>(amplitudes_.size()) != dimension_of(num_wires)) {
    throw InvalidArgument("amplitude vector length does not match 2^num_wires");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kTolerance) {
    throw NumericalError("state vector is not normalized");
  }
}

StateVector StateVector::basis(int num_wires, Word index) {
  check_wire_count(num_wires);
  if (index >= dimension_of(num_wires)) throw InvalidArgument("basis index out of range");
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dimension_of(num_wires)));
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(num_wires, std::move(amps));
}

StateVector StateVector::tensor(const StateVector& other) const {
  const Eigen::Index lo = other.amplitudes_.size();
  Vector amps(amplitudes_.size() * lo);
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    amps.segment(i * lo, lo) = amplitudes_[i] * other.amplitudes_;
  }
  return StateVector(num_wires_ + other.num_wires_, std::move(amps));
}

StateVector state_from_bits(std::string_view bits) {
  return StateVector::basis(static_cast<int>(bits.size()), parse_bits(bits));
}

StateVector maximally_entangled(int m) {
  const Word d = dimension_of(m);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(d * d));
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (Word x = 0; x < d; ++x) amps[static_cast<Eigen::Index>(x * d + x)] = a;
  return StateVector(2 * m, std::move(amps));
}

StateVector random_pure_bipartite(int wires_x, int wires_y, Rng& rng) {
  if (wires_x < 1 || wires_y < 1) throw InvalidArgument("both registers need at least one wire");
  const int n = wires_x + wires_y;
  check_wire_count(n);
  Vector amps(static_cast<Eigen::Index>(dimension_of(n)));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    amps[i] = Complex(re, im);
  }
  amps /= amps.norm();
  return StateVector(n, std::move(amps));
}

StateVector append_zero_wires(const StateVector& state, int count) {
  if (count == 0) return state;
  if (count < 0) throw InvalidArgument("negative wire count");
  const int n = state.num_wires() + count;
  check_wire_count(n);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
  for (Word i = 0; i < state.dimension(); ++i) {
    amps[static_cast<Eigen::Index>(i << count)] = state.amplitude(i);
  }
  return StateVector(n, std::move(amps));
}

StateVector reorder_wires(const StateVector& state, const Wires& order) {
  const int n = state.num_wires();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("reorder must list every wire");
  check_wires(order, n);
  Vector amps(static_cast<Eigen::Index>(state.dimension()));
  for (Word old_index = 0; old_index < state.dimension(); ++old_index) {
    const Word new_index = extract_bits(old_index, n, order);
    amps[static_cast<Eigen::Index>(new_index)] = state.amplitude(old_index);
  }
  return StateVector(n, std::move(amps));
}

double project_out(const StateVector& state, const Wires& wires, Word outcome,
                   Vector* post_amplitudes) {
  const int n = state.num_wires();
  check_wires(wires, n);
  const int k = static_cast<int>(wires.size());
  if (k >= n) throw InvalidArgument("cannot project out every wire");
  const Wires rest = detail::complement_wires(wires, n);
  const Word base = deposit_bits(0, n, wires, outcome);
  const auto rest_offsets = detail::wire_offsets(rest, n);
  Vector branch(static_cast<Eigen::Index>(rest_offsets.size()));
  for (std::size_t s = 0; s < rest_offsets.size(); ++s) {
    branch[static_cast<Eigen::Index>(s)] = state.amplitude(base | rest_offsets[s]);
  }
  const double p = branch.squaredNorm();
  if (post_amplitudes != nullptr) {
    *post_amplitudes = p > 0.0 ? Vector(branch / std::sqrt(p)) : branch;
  }
  return p;
}

std::vector<double> outcome_distribution(const StateVector& state, const Wires& wires) {
  const int n = state.num_wires();
  check_wires(wires, n);
  std::vector<double> dist(static_cast<std::size_t>(dimension_of(static_cast<int>(wires.size()))),
                           0.0);
  for (Word i = 0; i < state.dimension(); ++i) {
    dist[static_cast<std::size_t>(extract_bits(i, n, wires))] += std::norm(state.amplitude(i));
  }
  return dist;
}

std::size_t sample_index(const std::vector<double>& distribution, Rng& rng) {
  const double total = std::accumulate(distribution.begin(), distribution.end(), 0.0);
  const double u = rng.uniform() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (distribution[i] <= 0.0) continue;
    acc += distribution[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

Measurement measure_computational(const StateVector& state, const Wires& wires, Rng& rng) {
  const int n = state.num_wires();
  const auto dist = outcome_distribution(state, wires);
  const Word outcome = sample_index(dist, rng);
  const double p = dist[static_cast<std::size_t>(outcome)];
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(state.dimension()));
  const double scale = 1.0 / std::sqrt(p);
  for (Word i = 0; i < state.dimension(); ++i) {
    if (extract_bits(i, n, wires) == outcome) {
      amps[static_cast<Eigen::Index>(i)] = state.amplitude(i) * scale;
    }
  }
  return {outcome, StateVector(n, std::move(amps))};
}

}  // namespace qindlab::quantum
