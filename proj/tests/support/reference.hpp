#pragma once

// Brute-force reference computations for the tests. Everything here is built
// from explicit Kronecker products and dense matrices, without going through
// the library's wire-addressing code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace ref {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Mat identity(int wires) {
  const Eigen::Index d = Eigen::Index{1} << wires;
  return Mat::Identity(d, d);
}

inline Mat h1() {
  Mat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

inline Mat x1() {
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

// H on every one of `wires` qubits.
inline Mat h_all(int wires) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < wires; ++i) out = kron(out, h1());
  return out;
}

// Gate `g` on wire `w` of an n-wire register (wire 0 most significant).
inline Mat on_wire(const Mat& g, int w, int n) { return kron(kron(identity(w), g), identity(n - w - 1)); }

inline Vec basis(int wires, std::uint64_t index) {
  Vec v = Vec::Zero(Eigen::Index{1} << wires);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

// Matrix with column j = e_{f(j)}.
inline Mat permutation(int wires, const std::function<std::uint64_t(std::uint64_t)>& f) {
  const Eigen::Index d = Eigen::Index{1} << wires;
  Mat p = Mat::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) p(static_cast<Eigen::Index>(f(static_cast<std::uint64_t>(j))), j) = 1.0;
  return p;
}

// Trace over the last `traced` wires of an n-wire operator.
inline Mat trace_last(const Mat& rho, int n, int traced) {
  const Eigen::Index keep = Eigen::Index{1} << (n - traced);
  const Eigen::Index drop = Eigen::Index{1} << traced;
  Mat out = Mat::Zero(keep, keep);
  for (Eigen::Index i = 0; i < keep; ++i) {
    for (Eigen::Index j = 0; j < keep; ++j) {
      for (Eigen::Index k = 0; k < drop; ++k) out(i, j) += rho(i * drop + k, j * drop + k);
    }
  }
  return out;
}

// Trace over the first `traced` wires.
inline Mat trace_first(const Mat& rho, int n, int traced) {
  const Eigen::Index drop = Eigen::Index{1} << traced;
  const Eigen::Index keep = Eigen::Index{1} << (n - traced);
  Mat out = Mat::Zero(keep, keep);
  for (Eigen::Index k = 0; k < drop; ++k) out += rho.block(k * keep, k * keep, keep, keep);
  return out;
}

inline double trace_norm(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (hermitian + hermitian.adjoint()));
  return solver.eigenvalues().cwiseAbs().sum();
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace ref
