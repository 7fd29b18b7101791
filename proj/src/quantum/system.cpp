#include "qindlab/quantum/system.hpp"

#include <cmath>

#include "qindlab/common/error.hpp"

namespace qindlab::quantum {

namespace {

constexpr double kMergeFidelity = 1.0 - 1e-12;
constexpr double kNegligibleWeight = 1e-15;

}  // namespace

QuantumSystem::QuantumSystem(StateVector state) : num_wires_(state.num_wires()) {
  components_.push_back({1.0, std::move(state)});
}

QuantumSystem::QuantumSystem(std::vector<WeightedState> ensemble)
    : num_wires_(0), components_(std::move(ensemble)) {
  if (components_.empty()) throw InvalidArgument("empty ensemble");
  num_wires_ = components_.front().state.num_wires();
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.state.num_wires() != num_wires_) throw InvalidArgument("ensemble members differ in width");
    if (c.weight < 0.0) throw InvalidArgument("negative ensemble weight");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kTolerance) throw InvalidArgument("ensemble weights do not sum to 1");
}

void QuantumSystem::apply(const UnitaryOperator& u, const Wires& wires) {
  for (auto& c : components_) c.state = apply_unitary(u, c.state, wires);
}

void QuantumSystem::apply(const BasisPermutation& p, const Wires& wires) {
  for (auto& c : components_) c.state = apply_permutation(p, c.state, wires);
}

std::vector<double> QuantumSystem::distribution(const Wires& wires) const {
  std::vector<double> total;
  for (const auto& c : components_) {
    const auto d = outcome_distribution(c.state, wires);
    if (total.empty()) total.assign(d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) total[i] += c.weight * d[i];
  }
  return total;
}

double QuantumSystem::probability(const Wires& wires, Word outcome) const {
  const auto d = distribution(wires);
  if (outcome >= d.size()) throw InvalidArgument("outcome wider than measured wires");
  return d[static_cast<std::size_t>(outcome)];
}

Word QuantumSystem::measure(const Wires& wires, Rng& rng) {
  const auto dist = distribution(wires);
  const Word outcome = sample_index(dist, rng);
  const double p_total = dist[static_cast<std::size_t>(outcome)];
  std::vector<WeightedState> next;
  for (const auto& c : components_) {
    const double p = outcome_distribution(c.state, wires)[static_cast<std::size_t>(outcome)];
    const double w = c.weight * p / p_total;
    if (w <= kNegligibleWeight) continue;
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(c.state.dimension()));
    const double scale = 1.0 / std::sqrt(p);
    for (Word i = 0; i < c.state.dimension(); ++i) {
      if (extract_bits(i, num_wires_, wires) == outcome) {
        amps[static_cast<Eigen::Index>(i)] = c.state.amplitude(i) * scale;
      }
    }
    next.push_back({w, StateVector(num_wires_, std::move(amps))});
  }
  components_ = std::move(next);
  merge_components();
  return outcome;
}

void QuantumSystem::discard(const Wires& wires) {
  if (wires.empty()) return;
  check_wires(wires, num_wires_);
  const int remaining = num_wires_ - static_cast<int>(wires.size());
  if (remaining < 1) throw InvalidArgument("cannot discard every wire");
  const Word outcomes = dimension_of(static_cast<int>(wires.size()));
  std::vector<WeightedState> next;
  for (const auto& c : components_) {
    for (Word o = 0; o < outcomes; ++o) {
      Vector post;
      const double p = project_out(c.state, wires, o, &post);
      if (c.weight * p <= kNegligibleWeight) continue;
      next.push_back({c.weight * p, StateVector(remaining, std::move(post))});
    }
  }
  double total = 0.0;
  for (const auto& c : next) total += c.weight;
  for (auto& c : next) c.weight /= total;
  components_ = std::move(next);
  num_wires_ = remaining;
  merge_components();
}

void QuantumSystem::append_zero_wires(int count) {
  for (auto& c : components_) c.state = quantum::append_zero_wires(c.state, count);
  num_wires_ += count;
}

void QuantumSystem::reorder(const Wires& order) {
  for (auto& c : components_) c.state = reorder_wires(c.state, order);
}

DensityMatrix QuantumSystem::density_matrix() const { return DensityMatrix::from_ensemble(components_); }

void QuantumSystem::merge_components() {
  std::vector<WeightedState> merged;
  for (auto& c : components_) {
    bool absorbed = false;
    for (auto& m : merged) {
      const double overlap = std::norm(m.state.amplitudes().dot(c.state.amplitudes()));
      if (overlap >= kMergeFidelity) {
        m.weight += c.weight;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(std::move(c));
  }
  components_ = std::move(merged);
}

}  // namespace qindlab::quantum
