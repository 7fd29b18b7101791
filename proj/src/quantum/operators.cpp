#include <cmath>
#include <string>

#include "qindlab/common/error.hpp"
#include "qindlab/quantum/state.hpp"
#include "wire_offsets.hpp"

namespace qindlab::quantum {

namespace {

void check_operator_fits(int op_wires, const Wires& wires, int total) {
  if (static_cast<int>(wires.size()) != op_wires) {
    throw InvalidArgument("operator acts on " + std::to_string(op_wires) + " wires but " +
                          std::to_string(wires.size()) + " were given");
  }
  check_wires(wires, total);
}

}  // namespace

UnitaryOperator::UnitaryOperator(int num_wires, Matrix matrix)
    : num_wires_(num_wires), matrix_(std::move(matrix)) {
  if (num_wires < 1) throw InvalidArgument("operator needs at least one wire");
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_wires));
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw InvalidArgument("operator matrix does not match 2^num_wires");
  }
  const Matrix residual = matrix_ * matrix_.adjoint() - Matrix::Identity(dim, dim);
  if (residual.cwiseAbs().maxCoeff() > kTolerance) {
    throw NumericalError("matrix is not unitary");
  }
}

UnitaryOperator UnitaryOperator::identity(int num_wires) {
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_wires));
  return UnitaryOperator(num_wires, Matrix::Identity(dim, dim));
}

UnitaryOperator UnitaryOperator::adjoint() const {
  return UnitaryOperator(num_wires_, matrix_.adjoint());
}

UnitaryOperator operator*(const UnitaryOperator& a, const UnitaryOperator& b) {
  if (a.num_wires_ != b.num_wires_) throw InvalidArgument("operator sizes differ");
  return UnitaryOperator(a.num_wires_, a.matrix_ * b.matrix_);
}

UnitaryOperator UnitaryOperator::tensor(const UnitaryOperator& other) const {
  const Eigen::Index r = other.matrix_.rows();
  Matrix out(matrix_.rows() * r, matrix_.cols() * r);
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      out.block(i * r, j * r, r, r) = matrix_(i, j) * other.matrix_;
    }
  }
  return UnitaryOperator(num_wires_ + other.num_wires_, std::move(out));
}

BasisPermutation::BasisPermutation(int num_wires, std::vector<Word> image)
    : num_wires_(num_wires), image_(std::move(image)) {
  if (num_wires < 1 || num_wires > kMaxWordBits) throw InvalidArgument("bad permutation width");
  const Word dim = dimension_of(num_wires);
  if (image_.size() != dim) throw InvalidArgument("permutation table has wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(dim), false);
  for (Word y : image_) {
    if (y >= dim || hit[static_cast<std::size_t>(y)]) {
      throw InvalidArgument("basis map is not a permutation");
    }
    hit[static_cast<std::size_t>(y)] = true;
  }
}

BasisPermutation BasisPermutation::identity(int num_wires) {
  std::vector<Word> image(static_cast<std::size_t>(dimension_of(num_wires)));
  for (Word i = 0; i < image.size(); ++i) image[i] = i;
  return BasisPermutation(num_wires, std::move(image));
}

BasisPermutation BasisPermutation::inverse() const {
  std::vector<Word> inv(image_.size());
  for (Word i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = i;
  return BasisPermutation(num_wires_, std::move(inv));
}

BasisPermutation BasisPermutation::then(const BasisPermutation& next) const {
  if (next.num_wires_ != num_wires_) throw InvalidArgument("permutation sizes differ");
  std::vector<Word> out(image_.size());
  for (Word i = 0; i < image_.size(); ++i) out[i] = next(image_[i]);
  return BasisPermutation(num_wires_, std::move(out));
}

UnitaryOperator BasisPermutation::to_unitary() const {
  const auto dim = static_cast<Eigen::Index>(image_.size());
  Matrix m = Matrix::Zero(dim, dim);
  for (Word i = 0; i < image_.size(); ++i) {
    m(static_cast<Eigen::Index>(image_[i]), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return UnitaryOperator(num_wires_, std::move(m));
}

UnitaryOperator hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << s, s, s, -s;
  return UnitaryOperator(1, std::move(m));
}

UnitaryOperator pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return UnitaryOperator(1, std::move(m));
}

UnitaryOperator pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return UnitaryOperator(1, std::move(m));
}

UnitaryOperator cnot() {
  return BasisPermutation(2, {0, 1, 3, 2}).to_unitary();
}

UnitaryOperator hadamard_all(int m) {
  if (m < 1) throw InvalidArgument("hadamard_all needs m >= 1");
  if (m > kMaxWires) throw InvalidArgument("hadamard_all width exceeds simulator cap");
  const Word dim = dimension_of(m);
  const double scale = std::pow(2.0, -0.5 * m);
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Word i = 0; i < dim; ++i) {
    for (Word j = 0; j < dim; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          dot_parity(i, j) ? -scale : scale;
    }
  }
  return UnitaryOperator(m, std::move(out));
}

StateVector apply_unitary(const UnitaryOperator& u, const StateVector& state, const Wires& wires) {
  const int n = state.num_wires();
  check_operator_fits(u.num_wires(), wires, n);
  const auto offsets = detail::wire_offsets(wires, n);
  const Word mask = offsets.back();
  const auto k = static_cast<Eigen::Index>(offsets.size());
  Vector out = state.amplitudes();
  Vector gathered(k);
  for (Word base = 0; base < state.dimension(); ++base) {
    if ((base & mask) != 0) continue;
    for (Eigen::Index s = 0; s < k; ++s) gathered[s] = state.amplitude(base | offsets[s]);
    const Vector mapped = u.matrix() * gathered;
    for (Eigen::Index s = 0; s < k; ++s) out[static_cast<Eigen::Index>(base | offsets[s])] = mapped[s];
  }
  return StateVector(n, std::move(out));
}

StateVector apply_permutation(const BasisPermutation& p, const StateVector& state,
                              const Wires& wires) {
  const int n = state.num_wires();
  check_operator_fits(p.num_wires(), wires, n);
  const auto offsets = detail::wire_offsets(wires, n);
  const Word mask = offsets.back();
  Vector out(static_cast<Eigen::Index>(state.dimension()));
  for (Word base = 0; base < state.dimension(); ++base) {
    if ((base & mask) != 0) continue;
    for (Word s = 0; s < offsets.size(); ++s) {
      out[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(p(s))])] =
          state.amplitude(base | offsets[s]);
    }
  }
  return StateVector(n, std::move(out));
}

Matrix embed(const UnitaryOperator& u, const Wires& wires, int total_wires) {
  check_operator_fits(u.num_wires(), wires, total_wires);
  const Word dim = dimension_of(total_wires);
  const auto offsets = detail::wire_offsets(wires, total_wires);
  const Word mask = offsets.back();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Word base = 0; base < dim; ++base) {
    if ((base & mask) != 0) continue;
    for (Word a = 0; a < offsets.size(); ++a) {
      for (Word b = 0; b < offsets.size(); ++b) {
        out(static_cast<Eigen::Index>(base | offsets[a]), static_cast<Eigen::Index>(base | offsets[b])) =
            u.matrix()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return out;
}

double max_entry_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("matrices have different shapes");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qindlab::quantum
