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

#include "schmidtcert/schmidt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schmidtcert {

namespace {

// Amplitudes of |psi> reshaped to a dimA x dimB matrix: C(i, j) = <ij|psi>.
ComplexMatrix amplitude_matrix(const PureState& psi, BipartiteSpace space) {
  if (space.dim_a < 1 || space.dim_b < 1)
    throw std::invalid_argument("schmidt: bipartite dimensions must be >= 1");
  if (psi.dimension() != space.total_dimension())
    throw std::invalid_argument("schmidt: state size does not match the bipartite space");
  ComplexMatrix c(space.dim_a, space.dim_b);
  for (int i = 0; i < space.dim_a; ++i)
    for (int j = 0; j < space.dim_b; ++j) c(i, j) = psi.amplitudes()[i * space.dim_b + j];
  return c;
}

}  // namespace

WitnessOperator::WitnessOperator(HermitianOperator op, int r) : op_(std::move(op)), r_(r) {
  if (op_.space().factor_count() != 2)
    throw std::invalid_argument("WitnessOperator: operator must live on a bipartite space");
  if (r_ < 1) throw std::invalid_argument("WitnessOperator: r must be >= 1");
}

DensityOperator IsotropicFamily::to_density() const {
  return isotropic_state(d, p);
}

DensityOperator CounterexampleFamily::to_density() const {
  return counterexample_state(lambda);
}

SchmidtDecomposition schmidt_decompose(const PureState& psi, BipartiteSpace space) {
  ComplexMatrix c = amplitude_matrix(psi, space);
  Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = kSchmidtRankCutoff * sv.maxCoeff();

  SchmidtDecomposition dec;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] <= cutoff) break;  // singular values are sorted non-increasing
    dec.coefficients.push_back(sv[k]);
    dec.left_basis.push_back(svd.matrixU().col(k));
    // psi = sum_k s_k U.col(k) (x) conj(V.col(k)) for the SVD C = U S V^dag.
    dec.right_basis.push_back(svd.matrixV().col(k).conjugate());
  }
  dec.rank = static_cast<int>(dec.coefficients.size());
  return dec;
}

int schmidt_rank(const PureState& psi, BipartiteSpace space) {
  ComplexMatrix c = amplitude_matrix(psi, space);
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = kSchmidtRankCutoff * sv.maxCoeff();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv[k] > cutoff) ++rank;
  return rank;
}

WitnessOperator optimal_witness(int d, int r) {
  if (d < 1 || r < 1 || r > d)
    throw std::invalid_argument("optimal_witness: need 1 <= r <= d");
  ComplexMatrix w = identity(d * d) -
                    (static_cast<double>(d) / r) * max_entangled_projector(d);
  return WitnessOperator(HermitianOperator(std::move(w), FactorSpace::bipartite(d, d)), r);
}

double witness_expectation(const WitnessOperator& w, const DensityOperator& rho) {
  if (w.space().total_dimension() != rho.dimension())
    throw std::invalid_argument("witness_expectation: dimension mismatch");
  const Complex t = w.matrix().cwiseProduct(rho.matrix().transpose()).sum();
  if (std::abs(t.imag()) > 1e-10)
    throw std::runtime_error("witness_expectation: imaginary residue " +
                             std::to_string(t.imag()) + " exceeds tolerance");
  return t.real();
}

double isotropic_sn_threshold(int d, int r) {
  if (d < 2 || r < 1 || r > d)
    throw std::invalid_argument("isotropic_sn_threshold: need 1 <= r <= d, d >= 2");
  return (static_cast<double>(r) * d - 1.0) / (static_cast<double>(d) * d - 1.0);
}

double isotropic_lhv_threshold_projective(int d) {
  if (d < 2) throw std::invalid_argument("isotropic_lhv_threshold_projective: need d >= 2");
  double tail = 0.0;
  for (int k = 2; k <= d; ++k) tail += 1.0 / k;
  return tail / (d - 1.0);
}

DensityOperator isotropic_state(int d, double p) {
  if (d < 2) throw std::invalid_argument("isotropic_state: need d >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("isotropic_state: need p in [0, 1]");
  const int n = d * d;
  ComplexMatrix m = p * max_entangled_projector(d) +
                    ((1.0 - p) / n) * identity(n);
  return DensityOperator(std::move(m), FactorSpace::bipartite(d, d));
}

DensityOperator counterexample_state(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("counterexample_state: need lambda in [0, 1]");
  const int d = CounterexampleFamily::kLocalDim;
  const int n = d * d;
  ComplexVector phi2 = ComplexVector::Zero(n);
  phi2[0 * d + 0] = 1.0 / std::sqrt(2.0);
  phi2[1 * d + 1] = 1.0 / std::sqrt(2.0);
  ComplexMatrix iso = CounterexampleFamily::kMixingP * max_entangled_projector(d) +
                      ((1.0 - CounterexampleFamily::kMixingP) / n) * identity(n);
  ComplexMatrix m = lambda * iso + (1.0 - lambda) * (phi2 * phi2.adjoint());
  return DensityOperator(std::move(m), FactorSpace::bipartite(d, d));
}

}  // namespace schmidtcert
