#include <algorithm>
#include <cmath>
#include <string>

#include "qindlab/common/error.hpp"
#include "qindlab/quantum/state.hpp"
#include "wire_offsets.hpp"

namespace qindlab::quantum {

namespace {

void check_square(const Matrix& m, Word dim, const char* what) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (m.rows() != d || m.cols() != d) {
    throw InvalidArgument(std::string(what) + " does not match 2^num_wires");
  }
}

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

DensityMatrix::DensityMatrix(int num_wires, Matrix matrix)
    : num_wires_(num_wires), matrix_(std::move(matrix)) {
  if (num_wires < 1 || num_wires > kMaxWires) {
    throw InvalidArgument("register width " + std::to_string(num_wires) + " outside [1, " +
                          std::to_string(kMaxWires) + "]");
  }
  check_square(matrix_, dimension_of(num_wires), "density matrix");
  if (hermiticity_defect(matrix_) > kTolerance) throw NumericalError("density matrix not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > kTolerance) {
    throw NumericalError("density matrix trace differs from 1");
  }
  const auto eig = hermitian_eigenvalues(matrix_);
  if (eig.front() < -kTolerance) throw NumericalError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
  return DensityMatrix(state.num_wires(), state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::from_ensemble(const std::vector<WeightedState>& ensemble) {
  if (ensemble.empty()) throw InvalidArgument("empty ensemble");
  const int n = ensemble.front().state.num_wires();
  const auto dim = static_cast<Eigen::Index>(dimension_of(n));
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& [weight, state] : ensemble) {
    if (state.num_wires() != n) throw InvalidArgument("ensemble members differ in width");
    if (weight < 0.0) throw InvalidArgument("negative ensemble weight");
    rho += weight * (state.amplitudes() * state.amplitudes().adjoint());
  }
  return DensityMatrix(n, std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_wires) {
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_wires));
  return DensityMatrix(num_wires, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  const Eigen::Index r = other.matrix_.rows();
  Matrix out(matrix_.rows() * r, matrix_.cols() * r);
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      out.block(i * r, j * r, r, r) = matrix_(i, j) * other.matrix_;
    }
  }
  return DensityMatrix(num_wires_ + other.num_wires_, std::move(out));
}

DensityMatrix apply_unitary(const UnitaryOperator& u, const DensityMatrix& rho, const Wires& wires) {
  const Matrix full = embed(u, wires, rho.num_wires());
  return DensityMatrix(rho.num_wires(), full * rho.matrix() * full.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Wires& keep) {
  const int n = rho.num_wires();
  if (keep.empty()) throw InvalidArgument("partial trace must keep at least one wire");
  check_wires(keep, n);
  const auto kept = detail::wire_offsets(keep, n);
  const auto traced = detail::wire_offsets(detail::complement_wires(keep, n), n);
  const auto k = static_cast<Eigen::Index>(kept.size());
  Matrix out = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      Complex acc = 0.0;
      for (Word t : traced) {
        acc += rho.matrix()(static_cast<Eigen::Index>(kept[static_cast<std::size_t>(i)] | t),
                            static_cast<Eigen::Index>(kept[static_cast<std::size_t>(j)] | t));
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

std::vector<double> hermitian_eigenvalues(const Matrix& hermitian) {
  if (hermitian.rows() != hermitian.cols() || hermitian.rows() == 0) {
    throw InvalidArgument("eigenvalues need a nonempty square matrix");
  }
  if (hermiticity_defect(hermitian) > kTolerance) throw NumericalError("matrix is not Hermitian");
  const Matrix sym = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const Matrix& v = solver.eigenvectors();
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double residual = (sym * v - v * lambda.cast<Complex>().asDiagonal()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  if (residual > 1e-10 * scale) {
    throw NumericalError("eigendecomposition residual " + std::to_string(residual) +
                         " exceeds tolerance");
  }
  return {lambda.data(), lambda.data() + lambda.size()};
}

double trace_norm(const Matrix& hermitian) {
  double total = 0.0;
  for (double e : hermitian_eigenvalues(hermitian)) total += std::abs(e);
  return total;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.num_wires() != sigma.num_wires()) {
    throw InvalidArgument("trace distance between registers of different width");
  }
  return std::clamp(0.5 * trace_norm(rho.matrix() - sigma.matrix()), 0.0, 1.0);
}

}  // namespace qindlab::quantum
