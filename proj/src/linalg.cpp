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

#include "qansible/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qansible::lin {

Eigen::Index SubsystemShape::total_dim() const {
  Eigen::Index d = 1;
  for (Eigen::Index f : factor_dims) {
    d *= f;
  }
  return d;
}

SubsystemShape SubsystemShape::qubits(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("SubsystemShape::qubits: need at least one qubit");
  }
  return SubsystemShape{std::vector<Eigen::Index>(static_cast<std::size_t>(n_qubits), 2)};
}

bool all_finite(const CMatrix& a) {
  return a.allFinite();
}

bool all_finite(const CVector& a) {
  return a.allFinite();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix dagger(const CMatrix& a) {
  return a.adjoint();
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "matmul: incompatible shapes " << a.rows() << "x" << a.cols()
        << " and " << b.rows() << "x" << b.cols();
    throw std::invalid_argument(msg.str());
  }
  return a * b;
}

Complex trace(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << "trace: matrix is not square (" << a.rows() << "x" << a.cols() << ")";
    throw std::invalid_argument(msg.str());
  }
  return a.trace();
}

CMatrix partial_trace(const CMatrix& a, const SubsystemShape& shape,
                      const std::vector<int>& keep) {
  const auto& dims = shape.factor_dims;
  const int n_factors = static_cast<int>(dims.size());
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("partial_trace: matrix is not square");
  }
  if (a.rows() != shape.total_dim()) {
    std::ostringstream msg;
    msg << "partial_trace: matrix dimension " << a.rows()
        << " does not match subsystem shape product " << shape.total_dim();
    throw std::invalid_argument(msg.str());
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must not be empty");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_factors) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
    }
  }

  std::vector<int> traced;
  {
    std::size_t k = 0;
    for (int f = 0; f < n_factors; ++f) {
      if (k < keep.size() && keep[k] == f) {
        ++k;
      } else {
        traced.push_back(f);
      }
    }
  }

  // Stride of factor f in the flattened index; factor 0 is most significant.
  std::vector<Eigen::Index> stride(dims.size());
  {
    Eigen::Index s = 1;
    for (int f = n_factors - 1; f >= 0; --f) {
      stride[static_cast<std::size_t>(f)] = s;
      s *= dims[static_cast<std::size_t>(f)];
    }
  }

  const auto offsets_for = [&](const std::vector<int>& subset) {
    Eigen::Index sub_dim = 1;
    for (int f : subset) {
      sub_dim *= dims[static_cast<std::size_t>(f)];
    }
    std::vector<Eigen::Index> offs(static_cast<std::size_t>(sub_dim));
    for (Eigen::Index comp = 0; comp < sub_dim; ++comp) {
      Eigen::Index rest = comp;
      Eigen::Index off = 0;
      for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
        const Eigen::Index d = dims[static_cast<std::size_t>(*it)];
        off += (rest % d) * stride[static_cast<std::size_t>(*it)];
        rest /= d;
      }
      offs[static_cast<std::size_t>(comp)] = off;
    }
    return offs;
  };

  const std::vector<Eigen::Index> keep_off = offsets_for(keep);
  const std::vector<Eigen::Index> traced_off = offsets_for(traced);

  const auto kept_dim = static_cast<Eigen::Index>(keep_off.size());
  CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
  for (Eigen::Index r = 0; r < kept_dim; ++r) {
    for (Eigen::Index c = 0; c < kept_dim; ++c) {
      Complex acc = 0.0;
      for (Eigen::Index t_off : traced_off) {
        acc += a(keep_off[static_cast<std::size_t>(r)] + t_off,
                 keep_off[static_cast<std::size_t>(c)] + t_off);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  }
  double asym = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  if (asym > kHermitianTol) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: matrix is not Hermitian, max asymmetry " << asym;
    throw std::invalid_argument(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (a + a.adjoint()),
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  }
  const auto& vals = solver.eigenvalues();
  std::vector<double> out(static_cast<std::size_t>(vals.size()));
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    out[static_cast<std::size_t>(vals.size() - 1 - i)] = vals(i);
  }
  return out;
}

}  // namespace qansible::lin
