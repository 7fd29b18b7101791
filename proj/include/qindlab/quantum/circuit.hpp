#pragma once

#include <vector>

#include "qindlab/quantum/state.hpp"

namespace qindlab::quantum {

enum class GateKind { H, X, Z, CNOT };

struct Gate {
  GateKind kind;
  int target;
  int control = -1;  // CNOT only

  static Gate h(int wire) { return {GateKind::H, wire}; }
  static Gate x(int wire) { return {GateKind::X, wire}; }
  static Gate z(int wire) { return {GateKind::Z, wire}; }
  static Gate cx(int control, int target) { return {GateKind::CNOT, target, control}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct CircuitBranch {
  double probability;
  std::vector<Gate> gates;
};

// A classical description of a state: a gate list run from |0...0>, or a
// probability mixture of such lists.
class StateDescription {
 public:
  StateDescription(int num_wires, std::vector<Gate> gates);
  StateDescription(int num_wires, std::vector<CircuitBranch> mixture);

  int num_wires() const { return num_wires_; }
  bool is_pure() const { return branches_.size() == 1; }
  const std::vector<CircuitBranch>& branches() const { return branches_; }
  // Gate list of a pure description.
  const std::vector<Gate>& gates() const;

 private:
  int num_wires_;
  std::vector<CircuitBranch> branches_;
};

// H on every wire.
StateDescription uniform_superposition(int m);
// X on every wire, then H on every wire.
StateDescription hadamard_of_ones(int m);

StateVector apply_gates(const std::vector<Gate>& gates, StateVector state);

// Pure descriptions only.
StateVector prepare_pure(const StateDescription& desc);

std::vector<WeightedState> build_ensemble(const StateDescription& desc);
DensityMatrix build_state(const StateDescription& desc);

// Every gate in the set is self-inverse, so the inverse is the reversed list.
std::vector<Gate> inverse_gates(const std::vector<Gate>& gates);

}  // namespace qindlab::quantum
