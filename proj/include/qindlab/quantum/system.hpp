#pragma once

#include <vector>

#include "qindlab/quantum/state.hpp"

namespace qindlab::quantum {

// A register held as an explicit ensemble of pure states. Tracing out wires
// expands each component over the computational outcomes of those wires, so
// the global state stays pure per component and probabilities stay exact.
class QuantumSystem {
 public:
  explicit QuantumSystem(StateVector state);
  explicit QuantumSystem(std::vector<WeightedState> ensemble);

  int num_wires() const { return num_wires_; }
  const std::vector<WeightedState>& ensemble() const { return components_; }

  void apply(const UnitaryOperator& u, const Wires& wires);
  void apply(const BasisPermutation& p, const Wires& wires);

  // Exact outcome distribution on `wires` for the whole mixture.
  std::vector<double> distribution(const Wires& wires) const;
  double probability(const Wires& wires, Word outcome) const;

  // Samples an outcome with one uniform draw and collapses every component.
  // The measured wires stay in the register.
  Word measure(const Wires& wires, Rng& rng);

  // Removes `wires`; the remaining wires keep their relative order.
  void discard(const Wires& wires);

  void append_zero_wires(int count);
  // New wire i is old wire order[i].
  void reorder(const Wires& order);

  DensityMatrix density_matrix() const;

 private:
  void merge_components();

  int num_wires_;
  std::vector<WeightedState> components_;
};

}  // namespace qindlab::quantum
