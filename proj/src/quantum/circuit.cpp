#include "qindlab/quantum/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qindlab/common/error.hpp"

namespace qindlab::quantum {

namespace {

void check_gate(const Gate& g, int num_wires) {
  auto in_range = [num_wires](int w) { return w >= 0 && w < num_wires; };
  if (!in_range(g.target)) {
    throw InvalidArgument("gate target " + std::to_string(g.target) + " outside " +
                          std::to_string(num_wires) + " wires");
  }
  if (g.kind == GateKind::CNOT) {
    if (!in_range(g.control)) throw InvalidArgument("CNOT control outside register");
    if (g.control == g.target) throw InvalidArgument("CNOT control equals target");
  }
}

}  // namespace

StateDescription::StateDescription(int num_wires, std::vector<Gate> gates)
    : StateDescription(num_wires, std::vector<CircuitBranch>{{1.0, std::move(gates)}}) {}

StateDescription::StateDescription(int num_wires, std::vector<CircuitBranch> mixture)
    : num_wires_(num_wires), branches_(std::move(mixture)) {
  if (num_wires < 1 || num_wires > kMaxWires) throw InvalidArgument("description width out of range");
  if (branches_.empty()) throw InvalidArgument("mixture has no branches");
  double total = 0.0;
  for (const auto& b : branches_) {
    if (!(b.probability >= 0.0 && b.probability <= 1.0)) {
      throw InvalidArgument("mixture probability outside [0, 1]");
    }
    total += b.probability;
    for (const auto& g : b.gates) check_gate(g, num_wires);
  }
  if (std::abs(total - 1.0) > kTolerance) throw InvalidArgument("mixture probabilities do not sum to 1");
}

const std::vector<Gate>& StateDescription::gates() const {
  if (!is_pure()) throw InvalidArgument("mixed description has no single gate list");
  return branches_.front().gates;
}

StateDescription uniform_superposition(int m) {
  std::vector<Gate> gates;
  for (int w = 0; w < m; ++w) gates.push_back(Gate::h(w));
  return StateDescription(m, std::move(gates));
}

StateDescription hadamard_of_ones(int m) {
  std::vector<Gate> gates;
  for (int w = 0; w < m; ++w) gates.push_back(Gate::x(w));
  for (int w = 0; w < m; ++w) gates.push_back(Gate::h(w));
  return StateDescription(m, std::move(gates));
}

StateVector apply_gates(const std::vector<Gate>& gates, StateVector state) {
  static const UnitaryOperator h = hadamard();
  static const UnitaryOperator x = pauli_x();
  static const UnitaryOperator z = pauli_z();
  static const UnitaryOperator cx = cnot();
  for (const auto& g : gates) {
    check_gate(g, state.num_wires());
    switch (g.kind) {
      case GateKind::H: state = apply_unitary(h, state, {g.target}); break;
      case GateKind::X: state = apply_unitary(x, state, {g.target}); break;
      case GateKind::Z: state = apply_unitary(z, state, {g.target}); break;
      case GateKind::CNOT: state = apply_unitary(cx, state, {g.control, g.target}); break;
    }
  }
  return state;
}

StateVector prepare_pure(const StateDescription& desc) {
  return apply_gates(desc.gates(), StateVector::zero(desc.num_wires()));
}

std::vector<WeightedState> build_ensemble(const StateDescription& desc) {
  std::vector<WeightedState> out;
  for (const auto& b : desc.branches()) {
    if (b.probability == 0.0) continue;
    out.push_back({b.probability, apply_gates(b.gates, StateVector::zero(desc.num_wires()))});
  }
  return out;
}

DensityMatrix build_state(const StateDescription& desc) {
  return DensityMatrix::from_ensemble(build_ensemble(desc));
}

std::vector<Gate> inverse_gates(const std::vector<Gate>& gates) {
  return {gates.rbegin(), gates.rend()};
}

}  // namespace qindlab::quantum
