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
#include <limits>
#include <random>
#include <vector>

#include <doctest.h>

using namespace qansible;

namespace {

std::mt19937_64 test_rng(0x5eed0001ULL);

lin::CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  lin::CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = lin::Complex{normal(test_rng), normal(test_rng)};
    }
  }
  return m;
}

lin::CMatrix random_hermitian(Eigen::Index dim) {
  const lin::CMatrix a = random_matrix(dim, dim);
  return a + a.adjoint();
}

std::vector<Eigen::Index> factor_digits(Eigen::Index index,
                                        const std::vector<Eigen::Index>& dims) {
  std::vector<Eigen::Index> digits(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    digits[f] = index % dims[f];
    index /= dims[f];
  }
  return digits;
}

// Independent partial-trace oracle: walk every matrix entry, split its row
// and column indices into factor digits, and accumulate entries whose traced
// digits agree.
lin::CMatrix partial_trace_oracle(const lin::CMatrix& a,
                                  const std::vector<Eigen::Index>& dims,
                                  const std::vector<int>& keep) {
  std::vector<bool> kept(dims.size(), false);
  Eigen::Index out_dim = 1;
  for (int f : keep) {
    kept[static_cast<std::size_t>(f)] = true;
    out_dim *= dims[static_cast<std::size_t>(f)];
  }
  lin::CMatrix out = lin::CMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const auto di = factor_digits(i, dims);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto dj = factor_digits(j, dims);
      bool diagonal_on_traced = true;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        if (!kept[f] && di[f] != dj[f]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) {
        continue;
      }
      Eigen::Index ri = 0;
      Eigen::Index rj = 0;
      for (int f : keep) {
        const auto uf = static_cast<std::size_t>(f);
        ri = ri * dims[uf] + di[uf];
        rj = rj * dims[uf] + dj[uf];
      }
      out(ri, rj) += a(i, j);
    }
  }
  return out;
}

double max_abs(const lin::CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("SubsystemShape describes qubit registers") {
  const auto shape = lin::SubsystemShape::qubits(3);
  REQUIRE(shape.factor_dims == std::vector<Eigen::Index>{2, 2, 2});
  CHECK(shape.total_dim() == 8);
  CHECK(lin::SubsystemShape{{2, 3}}.total_dim() == 6);
  CHECK_THROWS_AS(lin::SubsystemShape::qubits(0), std::invalid_argument);
}

TEST_CASE("all_finite flags NaN and Inf") {
  lin::CMatrix m = lin::CMatrix::Identity(2, 2);
  CHECK(lin::all_finite(m));
  m(0, 1) = lin::Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_FALSE(lin::all_finite(m));
  lin::CVector v = lin::CVector::Zero(2);
  CHECK(lin::all_finite(v));
  v(1) = lin::Complex{0.0, std::numeric_limits<double>::infinity()};
  CHECK_FALSE(lin::all_finite(v));
}

TEST_CASE("kron matches the index formula") {
  const lin::CMatrix a = random_matrix(2, 3);
  const lin::CMatrix b = random_matrix(3, 2);
  const lin::CMatrix k = lin::kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index p = 0; p < b.rows(); ++p) {
        for (Eigen::Index q = 0; q < b.cols(); ++q) {
          CHECK(k(i * b.rows() + p, j * b.cols() + q) == a(i, j) * b(p, q));
        }
      }
    }
  }
}

TEST_CASE("kron on vectors agrees with kron on column matrices") {
  const lin::CMatrix a = random_matrix(3, 1);
  const lin::CMatrix b = random_matrix(2, 1);
  const lin::CVector va = a.col(0);
  const lin::CVector vb = b.col(0);
  const lin::CVector kv = lin::kron(va, vb);
  const lin::CMatrix km = lin::kron(a, b);
  REQUIRE(kv.size() == 6);
  CHECK(max_abs(km.col(0) - kv) == 0.0);
}

TEST_CASE("kron hand example") {
  lin::CMatrix a(2, 2);
  a << 1, 2, 3, 4;
  lin::CMatrix b(2, 2);
  b << 0, 1, 1, 0;
  const lin::CMatrix k = lin::kron(a, b);
  lin::CMatrix expected(4, 4);
  expected << 0, 1, 0, 2,
              1, 0, 2, 0,
              0, 3, 0, 4,
              3, 0, 4, 0;
  CHECK(max_abs(k - expected) == 0.0);
}

TEST_CASE("dagger is the conjugate transpose") {
  const lin::CMatrix a = random_matrix(3, 2);
  const lin::CMatrix d = lin::dagger(a);
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 3);
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      CHECK(d(i, j) == std::conj(a(j, i)));
    }
  }
}

TEST_CASE("matmul matches a triple loop and validates shapes") {
  const lin::CMatrix a = random_matrix(3, 4);
  const lin::CMatrix b = random_matrix(4, 2);
  const lin::CMatrix c = lin::matmul(a, b);
  REQUIRE(c.rows() == 3);
  REQUIRE(c.cols() == 2);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      lin::Complex sum{0.0, 0.0};
      for (Eigen::Index k = 0; k < 4; ++k) {
        sum += a(i, k) * b(k, j);
      }
      CHECK(std::abs(c(i, j) - sum) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(lin::matmul(a, random_matrix(3, 3)), std::invalid_argument);
}

TEST_CASE("trace sums the diagonal and rejects non-square input") {
  lin::CMatrix a(2, 2);
  a << lin::Complex{1.0, 2.0}, lin::Complex{5.0, 0.0},
      lin::Complex{0.0, 0.0}, lin::Complex{3.0, -1.0};
  CHECK(lin::trace(a) == lin::Complex{4.0, 1.0});
  CHECK_THROWS_AS(lin::trace(random_matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("partial_trace matches the brute-force oracle on qubits") {
  const auto shape = lin::SubsystemShape::qubits(3);
  const lin::CMatrix rho = random_hermitian(8);
  const std::vector<std::vector<int>> keeps = {{0},    {1},    {2},   {0, 1},
                                               {0, 2}, {1, 2}, {0, 1, 2}};
  for (const auto& keep : keeps) {
    CAPTURE(keep.size());
    const lin::CMatrix got = lin::partial_trace(rho, shape, keep);
    const lin::CMatrix want = partial_trace_oracle(rho, shape.factor_dims, keep);
    REQUIRE(got.rows() == want.rows());
    CHECK(max_abs(got - want) <= 1e-12);
    CHECK(std::abs(lin::trace(got) - lin::trace(rho)) <= 1e-12);
  }
}

TEST_CASE("partial_trace handles non-uniform factor dimensions") {
  const lin::SubsystemShape shape{{2, 3}};
  const lin::CMatrix rho = random_hermitian(6);
  for (const std::vector<int>& keep : {std::vector<int>{0}, std::vector<int>{1}}) {
    const lin::CMatrix got = lin::partial_trace(rho, shape, keep);
    const lin::CMatrix want = partial_trace_oracle(rho, shape.factor_dims, keep);
    CHECK(max_abs(got - want) <= 1e-12);
  }
}

TEST_CASE("partial_trace of a product factorises") {
  const lin::CMatrix a = random_hermitian(2);
  const lin::CMatrix b = random_hermitian(2);
  const lin::CMatrix joint = lin::kron(a, b);
  const auto shape = lin::SubsystemShape::qubits(2);
  const lin::CMatrix left = lin::partial_trace(joint, shape, {0});
  const lin::CMatrix right = lin::partial_trace(joint, shape, {1});
  CHECK(max_abs(left - a * lin::trace(b)) <= 1e-12);
  CHECK(max_abs(right - b * lin::trace(a)) <= 1e-12);
}

TEST_CASE("partial_trace validates its arguments") {
  const auto shape = lin::SubsystemShape::qubits(2);
  const lin::CMatrix rho = random_hermitian(4);
  CHECK_THROWS_AS(lin::partial_trace(random_matrix(4, 3), shape, {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lin::partial_trace(random_hermitian(8), shape, {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lin::partial_trace(rho, shape, {}), std::invalid_argument);
  CHECK_THROWS_AS(lin::partial_trace(rho, shape, {2}), std::invalid_argument);
  CHECK_THROWS_AS(lin::partial_trace(rho, shape, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(lin::partial_trace(rho, shape, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lin::partial_trace(rho, shape, {0, 0}), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues returns descending spectra") {
  lin::CMatrix flip(2, 2);
  flip << 0, 1, 1, 0;
  auto eigs = lin::hermitian_eigenvalues(flip);
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(-1.0).epsilon(1e-12));

  lin::CMatrix m(2, 2);
  m << lin::Complex{2.0, 0.0}, lin::Complex{0.0, 1.0},
      lin::Complex{0.0, -1.0}, lin::Complex{2.0, 0.0};
  eigs = lin::hermitian_eigenvalues(m);
  CHECK(std::abs(eigs[0] - 3.0) <= 1e-12);
  CHECK(std::abs(eigs[1] - 1.0) <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues moment identities on random input") {
  const lin::CMatrix a = random_hermitian(6);
  const auto eigs = lin::hermitian_eigenvalues(a);
  REQUIRE(eigs.size() == 6);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    sum += eigs[i];
    sum_sq += eigs[i] * eigs[i];
    if (i > 0) {
      CHECK(eigs[i - 1] >= eigs[i]);
    }
  }
  CHECK(std::abs(sum - lin::trace(a).real()) <= 1e-9);
  CHECK(std::abs(sum_sq - lin::trace(lin::matmul(a, a)).real()) <= 1e-9);
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
  lin::CMatrix a(2, 2);
  a << 0, 1, 0, 0;
  CHECK_THROWS_WITH_AS(lin::hermitian_eigenvalues(a),
                       doctest::Contains("asymmetry"), std::invalid_argument);
  CHECK_THROWS_AS(lin::hermitian_eigenvalues(random_matrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("rank-one projector spectrum against the closed form") {
  // P = |v><v| for a unit vector has eigenvalues {1, 0, ..., 0}.
  lin::CMatrix v = random_matrix(8, 1);
  v /= v.norm();
  const lin::CMatrix projector = v * v.adjoint();
  const auto eigs = lin::hermitian_eigenvalues(projector);
  CHECK(std::abs(eigs.front() - 1.0) <= 1e-9);
  for (std::size_t i = 1; i < eigs.size(); ++i) {
    CHECK(std::abs(eigs[i]) <= 1e-9);
  }
}
