// Copyright 2026 The qfruit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfruit/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qfruit {

namespace {

using cd = std::complex<double>;

struct Mat2 {
  cd m00, m01, m10, m11;
};

Mat2 gate_block(const Gate& gate) {
  const double c = std::cos(gate.angle / 2);
  const double s = std::sin(gate.angle / 2);
  const cd i{0.0, 1.0};
  switch (gate.kind) {
    case GateKind::SIGX: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::ROTX: return {c, -i * s, -i * s, c};
    case GateKind::ROTY: return {c, -s, s, c};
    case GateKind::ROTZ: return {std::exp(-i * (gate.angle / 2)), 0.0, 0.0,
                                 std::exp(i * (gate.angle / 2))};
    case GateKind::PHAS: break;
  }
  throw std::logic_error("PHAS has no 2x2 block");
}

// `w` holds the transpose of the running unitary, so left-multiplying the
// unitary by a gate mixes columns of w.
void apply_gate(DenseMatrix& w, const Gate& gate) {
  const auto dim = static_cast<StateIndex>(w.cols());
  StateIndex mask = 0;
  StateIndex want = 0;
  for (const auto& c : gate.controls) {
    mask |= StateIndex{1} << c.qubit;
    if (c.on_one) want |= StateIndex{1} << c.qubit;
  }

  if (gate.kind == GateKind::PHAS) {
    if (gate.target) {
      mask |= StateIndex{1} << *gate.target;
      want |= StateIndex{1} << *gate.target;
    }
    const cd phase = std::exp(cd{0.0, gate.angle});
    for (StateIndex x = 0; x < dim; ++x)
      if ((x & mask) == want) w.col(static_cast<Eigen::Index>(x)) *= phase;
    return;
  }

  const Mat2 m = gate_block(gate);
  const StateIndex tbit = StateIndex{1} << *gate.target;
  for (StateIndex x = 0; x < dim; ++x) {
    if ((x & tbit) || (x & mask) != want) continue;
    const auto i0 = static_cast<Eigen::Index>(x);
    const auto i1 = static_cast<Eigen::Index>(x | tbit);
    Eigen::VectorXcd c0 = w.col(i0);
    w.col(i0) = m.m00 * c0 + m.m01 * w.col(i1);
    w.col(i1) = m.m10 * c0 + m.m11 * w.col(i1);
  }
}

void apply_items(DenseMatrix& w, const std::vector<SeoItem>& items) {
  for (const auto& item : items) {
    if (const auto* gate = std::get_if<Gate>(&item.value)) {
      apply_gate(w, *gate);
    } else {
      const auto& loop = std::get<Loop>(item.value);
      for (std::int64_t r = 0; r < loop.reps; ++r) apply_items(w, loop.body);
    }
  }
}

void require_same_shape(const DenseMatrix& u, const DenseMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + " vs " +
                                std::to_string(v.rows()) + "x" +
                                std::to_string(v.cols()));
}

}  // namespace

Eigen::MatrixXd to_dense(const SparseSymmetric& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : h.pairs()) {
    d(static_cast<Eigen::Index>(e.i), static_cast<Eigen::Index>(e.j)) = e.w;
    d(static_cast<Eigen::Index>(e.j), static_cast<Eigen::Index>(e.i)) = e.w;
  }
  for (const auto& [k, w] : h.diagonal())
    d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = w;
  return d;
}

DenseMatrix expi_hermitian(const SparseSymmetric& h) {
  const Eigen::MatrixXd d = to_dense(h);
  if (!d.allFinite())
    throw std::invalid_argument("expi_hermitian: non-finite Hamiltonian entry");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(d);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("expi_hermitian: eigendecomposition failed");
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<cd>() * cd{0.0, 1.0}).array().exp();
  const DenseMatrix v = eig.eigenvectors().cast<cd>();
  return v * phases.asDiagonal() * v.transpose();
}

DenseMatrix program_unitary(const SeoProgram& program) {
  validate(program);
  if (program.num_qubits > 12)
    throw std::invalid_argument("program_unitary limited to 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << program.num_qubits;
  DenseMatrix w = DenseMatrix::Identity(dim, dim);
  apply_items(w, program.body);
  return w.transpose();
}

double frobenius_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.rows(); ++j)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      sum += (a(j, k) * std::conj(a(j, k))).real();
  return std::sqrt(sum);
}

double frobenius_distance(const DenseMatrix& u, const DenseMatrix& v) {
  require_same_shape(u, v);
  return frobenius_norm(u - v);
}

double spectral_norm(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  return svd.singularValues()(0);
}

double verify_compile(const SparseSymmetric& h_padded, const SeoProgram& program) {
  if (program.num_qubits < 1 || program.num_qubits > 62 ||
      h_padded.dim() != (StateIndex{1} << program.num_qubits))
    throw std::invalid_argument(
        "verify_compile: Hamiltonian dimension " + std::to_string(h_padded.dim()) +
        " does not match a " + std::to_string(program.num_qubits) +
        "-qubit program");
  return frobenius_distance(expi_hermitian(h_padded), program_unitary(program));
}

}  // namespace qfruit
