#include "qindlab/oracles/encryption_unitary.hpp"

#include <cmath>
#include <string>

#include "qindlab/common/error.hpp"

namespace qindlab::oracles {

using quantum::StateVector;
using quantum::Vector;
using quantum::wire_range;

namespace {

constexpr double kExact = 1e-12;

void check_randomness(const SchemePtr& scheme, Word r) {
  if (!scheme) throw InvalidArgument("missing scheme");
  if (r > low_mask(scheme->randomness_bits())) {
    throw InvalidArgument("randomness wider than " + std::to_string(scheme->randomness_bits()) +
                          " bits");
  }
}

void check_fits(int wires) {
  if (wires > quantum::kMaxWires) {
    throw InvalidArgument("oracle needs " + std::to_string(wires) + " wires, above the simulator cap");
  }
}

}  // namespace

EncryptionUnitary type1_unitary(const SchemePtr& scheme, Key key, Word r) {
  check_randomness(scheme, r);
  const int m = scheme->message_bits();
  const int l = scheme->ciphertext_bits();
  check_fits(m + l);
  std::vector<Word> image(dimension_of(m + l));
  for (Word x = 0; x < dimension_of(m); ++x) {
    const Word c = scheme->enc(key, r, x);
    for (Word y = 0; y < dimension_of(l); ++y) image[concat(x, y, l)] = concat(x, y ^ c, l);
  }
  return {OracleKind::Type1, Direction::Encrypt, scheme, key, r, BasisPermutation(m + l, std::move(image))};
}

EncryptionUnitary type1_decryption_unitary(const SchemePtr& scheme, Key key, Word r) {
  check_randomness(scheme, r);
  const int m = scheme->message_bits();
  const int l = scheme->ciphertext_bits();
  check_fits(m + l);
  std::vector<Word> image(dimension_of(m + l));
  for (Word y = 0; y < dimension_of(l); ++y) {
    const Word p = scheme->dec(key, y) & low_mask(m);
    for (Word x = 0; x < dimension_of(m); ++x) image[concat(y, x, m)] = concat(y, x ^ p, m);
  }
  return {OracleKind::Type1, Direction::Decrypt, scheme, key, r, BasisPermutation(m + l, std::move(image))};
}

EncryptionUnitary type2_unitary(const SchemePtr& scheme, Key key, Word r) {
  check_randomness(scheme, r);
  if (!scheme->has_type2_completion()) {
    throw NotApplicable("scheme " + scheme->name() + " declares no type-2 completion");
  }
  const int m = scheme->message_bits();
  const int a = scheme->ancilla_bits();
  const int l = scheme->ciphertext_bits();
  check_fits(l);
  std::vector<Word> image(dimension_of(l));
  for (Word x = 0; x < dimension_of(m); ++x) {
    for (Word anc = 0; anc < dimension_of(a); ++anc) {
      image[concat(x, anc, a)] = scheme->type2_completion(key, r, x, anc);
    }
  }
  return {OracleKind::Type2, Direction::Encrypt, scheme, key, r, BasisPermutation(l, std::move(image))};
}

EncryptionUnitary adjoint(const EncryptionUnitary& u) {
  EncryptionUnitary out = u;
  out.permutation = u.permutation.inverse();
  out.direction = u.direction == Direction::Encrypt ? Direction::Decrypt : Direction::Encrypt;
  return out;
}

EncryptionUnitary type1_from_type2(const EncryptionUnitary& u2) {
  if (u2.kind != OracleKind::Type2 || u2.direction != Direction::Encrypt) {
    throw InvalidArgument("type1_from_type2 expects a type-2 encryption oracle");
  }
  const int m = u2.scheme->message_bits();
  const int a = u2.scheme->ancilla_bits();
  const int l = u2.scheme->ciphertext_bits();
  const int total = 2 * l;
  check_fits(total);
  const auto u = u2.permutation.to_unitary();
  const auto u_dag = u.adjoint();
  const auto cx = quantum::cnot();
  const quantum::Wires xa = wire_range(0, l);

  // Columns indexed by (x, y) on m + l wires; the circuit input is |x, 0^a, y>.
  const auto dim = static_cast<Eigen::Index>(dimension_of(m + l));
  Matrix result = Matrix::Zero(dim, dim);
  for (Word x = 0; x < dimension_of(m); ++x) {
    for (Word y = 0; y < dimension_of(l); ++y) {
      StateVector s = StateVector::basis(total, concat(concat(x, 0, a), y, l));
      s = quantum::apply_unitary(u, s, xa);
      for (int w = 0; w < l; ++w) s = quantum::apply_unitary(cx, s, {w, l + w});
      s = quantum::apply_unitary(u_dag, s, xa);
      double leaked = 0.0;
      for (Word i = 0; i < s.dimension(); ++i) {
        const Word anc = (i >> l) & low_mask(a);
        if (anc != 0) {
          leaked += std::norm(s.amplitude(i));
          continue;
        }
        const Word row = concat(i >> (l + a), i & low_mask(l), l);
        result(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(concat(x, y, l))) = s.amplitude(i);
      }
      if (leaked > kExact) throw NumericalError("ancilla register not returned to zero");
    }
  }
  if (!is_permutation_matrix(result)) throw NumericalError("converted oracle is not a permutation");
  std::vector<Word> image(static_cast<std::size_t>(dim));
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = 0;
    result.col(col).cwiseAbs().maxCoeff(&row);
    image[static_cast<std::size_t>(col)] = static_cast<Word>(row);
  }
  return {OracleKind::Type1, Direction::Encrypt, u2.scheme, u2.key, u2.randomness,
          BasisPermutation(m + l, std::move(image))};
}

Matrix type2_from_type1(const EncryptionUnitary& u1_enc, const EncryptionUnitary& u1_dec) {
  if (u1_enc.kind != OracleKind::Type1 || u1_enc.direction != Direction::Encrypt ||
      u1_dec.kind != OracleKind::Type1 || u1_dec.direction != Direction::Decrypt) {
    throw InvalidArgument("type2_from_type1 expects type-1 encryption and decryption oracles");
  }
  if (u1_enc.scheme != u1_dec.scheme || u1_enc.key != u1_dec.key ||
      u1_enc.randomness != u1_dec.randomness) {
    throw InvalidArgument("type-1 oracles disagree on scheme, key or randomness");
  }
  const int m = u1_enc.scheme->message_bits();
  const int l = u1_enc.scheme->ciphertext_bits();
  const auto enc = u1_enc.permutation.to_unitary();
  const auto dec = u1_dec.permutation.to_unitary();
  // Register X on wires [0, m), register Y on [m, m + l).
  quantum::Wires dec_wires = wire_range(m, l);
  for (int w = 0; w < m; ++w) dec_wires.push_back(w);

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dimension_of(l)),
                            static_cast<Eigen::Index>(dimension_of(m)));
  for (Word x = 0; x < dimension_of(m); ++x) {
    StateVector s = StateVector::basis(m + l, concat(x, 0, l));
    s = quantum::apply_unitary(enc, s, wire_range(0, m + l));
    s = quantum::apply_unitary(dec, s, dec_wires);
    Vector post;
    const double p = quantum::project_out(s, wire_range(0, m), 0, &post);
    if (std::abs(p - 1.0) > kExact) throw NumericalError("plaintext register not cleared");
    out.col(static_cast<Eigen::Index>(x)) = post;
  }
  return out;
}

Matrix ancilla_zero_restriction(const EncryptionUnitary& u2) {
  if (u2.kind != OracleKind::Type2) throw InvalidArgument("expected a type-2 oracle");
  const int m = u2.scheme->message_bits();
  const int a = u2.scheme->ancilla_bits();
  const Matrix full = u2.matrix();
  Matrix out(full.rows(), static_cast<Eigen::Index>(dimension_of(m)));
  for (Word x = 0; x < dimension_of(m); ++x) {
    out.col(static_cast<Eigen::Index>(x)) = full.col(static_cast<Eigen::Index>(concat(x, 0, a)));
  }
  return out;
}

bool is_permutation_matrix(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int row_ones = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex v = m(i, j);
      if (std::abs(v - Complex(1.0, 0.0)) <= tolerance) {
        ++row_ones;
      } else if (std::abs(v) > tolerance) {
        return false;
      }
    }
    if (row_ones != 1) return false;
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int col_ones = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j) - Complex(1.0, 0.0)) <= tolerance) ++col_ones;
    }
    if (col_ones != 1) return false;
  }
  return true;
}

}  // namespace qindlab::oracles
