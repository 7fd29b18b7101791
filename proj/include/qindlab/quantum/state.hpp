#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qindlab/common/bits.hpp"
#include "qindlab/common/rng.hpp"

#ifndef QINDLAB_MAX_WIRES
#define QINDLAB_MAX_WIRES 14
#endif

// Exact dense simulation of small multi-qubit systems.
//
// Index convention: in a register of n wires, basis index i encodes wire 0 as
// its most significant bit, so |b_0 b_1 ... b_{n-1}> has index
// b_0 * 2^{n-1} + ... + b_{n-1}. Every module follows this convention.
namespace qindlab::quantum {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Wires = std::vector<int>;

inline constexpr int kMaxWires = QINDLAB_MAX_WIRES;
inline constexpr double kTolerance = 1e-9;

// {first, first + 1, ..., first + count - 1}
Wires wire_range(int first, int count);

// Throws InvalidArgument unless `wires` are distinct and all < total.
void check_wires(const Wires& wires, int total);

class StateVector {
 public:
  // Amplitudes must have length 2^num_wires and unit norm (within 1e-9).
  StateVector(int num_wires, Vector amplitudes);

  static StateVector basis(int num_wires, Word index);
  static StateVector zero(int num_wires) { return basis(num_wires, 0); }

  int num_wires() const { return num_wires_; }
  Word dimension() const { return dimension_of(num_wires_); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(Word index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }
  double norm() const { return amplitudes_.norm(); }

  // this (leading wires) ⊗ other (trailing wires)
  StateVector tensor(const StateVector& other) const;

 private:
  int num_wires_;
  Vector amplitudes_;
};

struct WeightedState {
  double weight;
  StateVector state;
};

class UnitaryOperator {
 public:
  // Rejects matrices with max |U U^† - I| above 1e-9.
  UnitaryOperator(int num_wires, Matrix matrix);

  static UnitaryOperator identity(int num_wires);

  int num_wires() const { return num_wires_; }
  const Matrix& matrix() const { return matrix_; }

  UnitaryOperator adjoint() const;
  // (a * b) applies b first.
  friend UnitaryOperator operator*(const UnitaryOperator& a, const UnitaryOperator& b);
  UnitaryOperator tensor(const UnitaryOperator& other) const;

 private:
  int num_wires_;
  Matrix matrix_;
};

// A unitary that permutes computational basis states: |i> -> |image[i]>.
class BasisPermutation {
 public:
  BasisPermutation(int num_wires, std::vector<Word> image);

  static BasisPermutation identity(int num_wires);

  int num_wires() const { return num_wires_; }
  Word operator()(Word index) const { return image_[static_cast<std::size_t>(index)]; }
  const std::vector<Word>& image() const { return image_; }

  BasisPermutation inverse() const;
  // Applies *this first, then `next`.
  BasisPermutation then(const BasisPermutation& next) const;
  UnitaryOperator to_unitary() const;

  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  int num_wires_;
  std::vector<Word> image_;
};

class DensityMatrix {
 public:
  // Checks Hermiticity, unit trace and eigenvalues >= -1e-9.
  DensityMatrix(int num_wires, Matrix matrix);

  static DensityMatrix from_pure(const StateVector& state);
  static DensityMatrix from_ensemble(const std::vector<WeightedState>& ensemble);
  static DensityMatrix maximally_mixed(int num_wires);

  int num_wires() const { return num_wires_; }
  const Matrix& matrix() const { return matrix_; }
  double purity() const;
  DensityMatrix tensor(const DensityMatrix& other) const;

 private:
  int num_wires_;
  Matrix matrix_;
};

// ---------------------------------------------------------------------------
// States and gates

StateVector state_from_bits(std::string_view bits);

UnitaryOperator hadamard();
UnitaryOperator pauli_x();
UnitaryOperator pauli_z();
// Two wires: control first, target second.
UnitaryOperator cnot();
// H^{⊗m}, entry (i, j) = (-1)^{i·j} / 2^{m/2}.
UnitaryOperator hadamard_all(int m);

// Σ_x 2^{-m/2} |x>|x> on 2m wires.
StateVector maximally_entangled(int m);

// Normalized complex-Gaussian amplitudes on wires_x + wires_y wires (the x
// register leading).
StateVector random_pure_bipartite(int wires_x, int wires_y, Rng& rng);

// ---------------------------------------------------------------------------
// Applying operators to parts of a register

StateVector apply_unitary(const UnitaryOperator& u, const StateVector& state, const Wires& wires);
StateVector apply_permutation(const BasisPermutation& p, const StateVector& state,
                              const Wires& wires);
DensityMatrix apply_unitary(const UnitaryOperator& u, const DensityMatrix& rho,
                            const Wires& wires);

// Full 2^total x 2^total matrix of `u` acting on `wires`, identity elsewhere.
Matrix embed(const UnitaryOperator& u, const Wires& wires, int total_wires);

// Appends `count` wires in |0> after the existing ones.
StateVector append_zero_wires(const StateVector& state, int count);

// New wire i is old wire order[i]; `order` must be a permutation of all wires.
StateVector reorder_wires(const StateVector& state, const Wires& order);

// Projects `wires` onto `outcome` and removes them. Returns the branch
// probability; `post` receives the normalized remainder when it is nonzero.
double project_out(const StateVector& state, const Wires& wires, Word outcome,
                   Vector* post_amplitudes);

// ---------------------------------------------------------------------------
// Measurement

// Born distribution over outcomes on `wires` (first wire most significant).
std::vector<double> outcome_distribution(const StateVector& state, const Wires& wires);

struct Measurement {
  Word outcome;
  StateVector post_state;
};

// Measured wires stay in the register, collapsed to the observed outcome.
Measurement measure_computational(const StateVector& state, const Wires& wires, Rng& rng);

// Index drawn from `distribution` with a single uniform variate.
std::size_t sample_index(const std::vector<double>& distribution, Rng& rng);

// ---------------------------------------------------------------------------
// Mixed states and distances

DensityMatrix partial_trace(const DensityMatrix& rho, const Wires& keep);

// Eigenvalues (ascending) of a Hermitian matrix; the decomposition residual
// must stay below 1e-10 relative to the matrix scale.
std::vector<double> hermitian_eigenvalues(const Matrix& hermitian);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix& hermitian);

// ½ ||rho - sigma||_tr
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

double max_entry_deviation(const Matrix& a, const Matrix& b);

}  // namespace qindlab::quantum
