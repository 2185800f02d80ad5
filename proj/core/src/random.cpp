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

#include "schmidtcert/random.hpp"

#include <cmath>
#include <stdexcept>

namespace schmidtcert {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform() { return unif_(engine_); }

double RngStream::gaussian() { return normal_(engine_); }

ComplexMatrix ginibre(int rows, int cols, RngStream& rng) {
  ComplexMatrix m(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = Complex{rng.gaussian() * s, rng.gaussian() * s};
  return m;
}

ComplexMatrix haar_unitary(int d, RngStream& rng) {
  ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution is Haar, not QR-convention dependent.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

PureState haar_pure_state(FactorSpace space, RngStream& rng) {
  const int n = space.total_dimension();
  ComplexVector v(n);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) v[i] = Complex{rng.gaussian() * s, rng.gaussian() * s};
  v /= v.norm();
  return PureState(std::move(v), std::move(space));
}

DensityOperator random_density(FactorSpace space, RngStream& rng) {
  const int n = space.total_dimension();
  ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace();
  w = (w + w.adjoint().eval()) / 2.0;
  return DensityOperator(std::move(w), std::move(space));
}

HermitianOperator random_hermitian(FactorSpace space, RngStream& rng) {
  const int n = space.total_dimension();
  ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix h = (g + g.adjoint().eval()) / 2.0;
  return HermitianOperator(std::move(h), std::move(space));
}

std::vector<double> dirichlet_uniform(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("dirichlet_uniform: n must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = expo(rng.engine());
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

Povm random_dichotomic_povm(FactorSpace space, RngStream& rng) {
  const int n = space.total_dimension();
  ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix w = g * g.adjoint();
  w = (w + w.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(w, Eigen::EigenvaluesOnly);
  w /= solver.eigenvalues().maxCoeff();
  ComplexMatrix rest = identity(n) - w;
  std::vector<HermitianOperator> elements;
  elements.emplace_back(std::move(w), space);
  elements.emplace_back(std::move(rest), space);
  return Povm(std::move(elements));
}

}  // namespace schmidtcert
