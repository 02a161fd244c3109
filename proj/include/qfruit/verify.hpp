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

#pragma once

#include <Eigen/Dense>

#include "qfruit/hamiltonian.hpp"
#include "qfruit/seo.hpp"

namespace qfruit {

using DenseMatrix = Eigen::MatrixXcd;

Eigen::MatrixXd to_dense(const SparseSymmetric& h);

/// e^{iH} = V diag(e^{iλ}) V^T from the real symmetric eigendecomposition.
DenseMatrix expi_hermitian(const SparseSymmetric& h);

/// Product of the gate matrices of expand(program), first gate acting first.
DenseMatrix program_unitary(const SeoProgram& program);

/// sqrt(sum_jk A_jk conj(A_jk)).
double frobenius_norm(const DenseMatrix& a);
double frobenius_distance(const DenseMatrix& u, const DenseMatrix& v);

/// Largest singular value.
double spectral_norm(const DenseMatrix& a);

/// ||e^{iH} - U_program||_F with H already padded to the register size.
double verify_compile(const SparseSymmetric& h_padded, const SeoProgram& program);

}  // namespace qfruit
