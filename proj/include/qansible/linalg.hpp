// Copyright 2026 The qansible developers
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

/**
 * @file
 * Dense complex linear algebra kernel: tensor products, adjoints, traces,
 * partial traces and Hermitian eigenvalues. Carries no quantum semantics;
 * the quantum layer sits on top of it.
 */

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qansible::lin {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerance for algebraic identities evaluated in double precision.
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance under which a matrix is admitted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Tolerance for iteratively computed eigenresults.
inline constexpr double kEigenTol = 1e-9;

/// Ordered local dimensions of a tensor factorisation. Factor 0 is the
/// most significant index of the flattened product space.
struct SubsystemShape {
  std::vector<Eigen::Index> factor_dims;

  /// Product of all factor dimensions.
  Eigen::Index total_dim() const;

  /// Shape of an n-qubit register (n factors of dimension 2).
  static SubsystemShape qubits(int n_qubits);
};

/// True when every entry is finite (no NaN or Inf).
bool all_finite(const CMatrix& a);
bool all_finite(const CVector& a);

/// Kronecker product; entry (i*rb + k, j*cb + l) = a(i,j) * b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

/// Conjugate transpose.
CMatrix dagger(const CMatrix& a);

/// Matrix product. Throws std::invalid_argument on incompatible shapes.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Sum of diagonal entries. Throws std::invalid_argument if not square.
Complex trace(const CMatrix& a);

/// Traces out every factor not listed in `keep` (0-based, strictly
/// increasing). The result keeps the listed factors in their original
/// order and preserves trace and Hermiticity.
CMatrix partial_trace(const CMatrix& a, const SubsystemShape& shape,
                      const std::vector<int>& keep);

/// Eigenvalues of a Hermitian matrix, descending. Throws
/// std::invalid_argument naming the max asymmetry when the input is not
/// Hermitian within kHermitianTol.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

}  // namespace qansible::lin
