// Copyright 2026 The schmidtcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent oracles used to pin expected values. These deliberately avoid
// the library's own code paths: the partial-trace oracle is a plain index
// loop, and the rank oracles use Gaussian elimination and a Gram-matrix
// eigendecomposition instead of the SVD route the library takes.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "schmidtcert/qlinalg.hpp"
#include "schmidtcert/random.hpp"

namespace schmidtcert::testing {

// Four-index-loop partial trace for a bipartite operator. keep_first selects
// the A factor, otherwise B.
inline ComplexMatrix ptrace_loop_2(const ComplexMatrix& m, int da, int db, bool keep_first) {
  if (keep_first) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

// Definition-level Kronecker product.
inline ComplexMatrix kron_loop(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

// Rank by Gaussian elimination with partial pivoting.
inline int gaussian_rank(ComplexMatrix m, double tol = 1e-10) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    for (Eigen::Index r = row + 1; r < rows; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) <= tol) continue;
    m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      const Complex f = m(r, col) / m(row, col);
      m.row(r) -= f * m.row(row);
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Rank by counting eigenvalues of C^dag C above a relative cutoff. The
// cutoff must sit above the eigensolver noise floor (~1e-16 of the top
// eigenvalue), so this resolves exact zeros, not near-degenerate spectra.
inline int gram_rank(const ComplexMatrix& c, double cutoff = 1e-12) {
  ComplexMatrix gram = c.adjoint() * c;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (solver.eigenvalues()[i] > cutoff * top) ++rank;
  return rank;
}

// Pure bipartite state with exactly `rank` nonzero Schmidt coefficients.
inline PureState planted_rank_state(int d, int rank, RngStream& rng) {
  const ComplexMatrix u = haar_unitary(d, rng);
  const ComplexMatrix v = haar_unitary(d, rng);
  const std::vector<double> lam = dirichlet_uniform(rank, rng);
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < rank; ++i) {
    const double c = std::sqrt(lam[i]);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) psi[a * d + b] += c * u(a, i) * v(b, i);
  }
  psi /= psi.norm();
  return PureState(std::move(psi), FactorSpace::bipartite(d, d));
}

inline ComplexVector basis_ket(int dim, int i) {
  ComplexVector v = ComplexVector::Zero(dim);
  v[i] = 1.0;
  return v;
}

}  // namespace schmidtcert::testing
