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

#include "schmidtcert/decompose.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schmidtcert {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kRankCutoffRel = 1e-14;

// Column-stacked vectorization with real and imaginary parts stacked:
// out[2*(j*n + i)/...] layout is [Re(vec(m)); Im(vec(m))].
Eigen::VectorXd vec_real(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd v(2 * n * n);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) v[k++] = m(i, j).real();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) v[k++] = m(i, j).imag();
  return v;
}

}  // namespace

ProductEnsemble::ProductEnsemble(std::vector<DensityOperator> states)
    : states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("ProductEnsemble: needs at least one state");
  dim_ = states_.front().dimension();
  for (const DensityOperator& s : states_)
    if (s.dimension() != dim_)
      throw std::invalid_argument("ProductEnsemble: members must share one dimension");

  // Rank of the Gram matrix of the members viewed as vectors in the real
  // space of Hermitian operators.
  const int n = size();
  RealMatrix gram(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      gram(a, b) = real_trace_product(states_[a].matrix(), states_[b].matrix());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gram, Eigen::EigenvaluesOnly);
  const double cutoff = 1e-10 * solver.eigenvalues().cwiseAbs().maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (solver.eigenvalues()[i] > cutoff) ++rank;
  spanning_ = (rank == dim_ * dim_);
}

GammaDecomposition::GammaDecomposition(RealMatrix gamma, ProductEnsemble left,
                                       ProductEnsemble right, WitnessOperator target)
    : gamma_(std::move(gamma)),
      left_(std::move(left)),
      right_(std::move(right)),
      target_(std::move(target)) {
  if (gamma_.rows() != left_.size() || gamma_.cols() != right_.size())
    throw std::invalid_argument("GammaDecomposition: gamma shape does not match the ensembles");
  residual_ = frobenius_distance(reconstruct(gamma_, left_, right_).matrix(),
                                 target_.matrix());
  if (residual_ > kDecompositionResidualTol)
    throw std::invalid_argument("GammaDecomposition: reconstruction residual " +
                                std::to_string(residual_) + " exceeds tolerance");
}

ProductEnsemble canonical_ensemble(int d) {
  if (d < 2) throw std::invalid_argument("canonical_ensemble: need d >= 2");
  const double s = 1.0 / std::sqrt(2.0);
  const Complex im{0.0, 1.0};
  std::vector<ComplexVector> kets;
  for (int i = 0; i < d; ++i) {
    ComplexVector v = ComplexVector::Zero(d);
    v[i] = 1.0;
    kets.push_back(v);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ComplexVector v = ComplexVector::Zero(d);
      v[i] = s;
      v[j] = s;
      kets.push_back(v);
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ComplexVector v = ComplexVector::Zero(d);
      v[i] = s;
      v[j] = im * s;
      kets.push_back(v);
    }
  std::vector<DensityOperator> states;
  for (const ComplexVector& v : kets)
    states.emplace_back(projector(v), FactorSpace::single(d));
  return ProductEnsemble(std::move(states));
}

ProductEnsemble canonical_qutrit_ensemble() { return canonical_ensemble(3); }

GammaDecomposition solve_gamma(const WitnessOperator& w, const ProductEnsemble& left,
                               const ProductEnsemble& right) {
  const int da = left.dimension();
  const int db = right.dimension();
  if (w.space().total_dimension() != da * db)
    throw std::invalid_argument("solve_gamma: witness dimension does not match the ensembles");

  const int nx = left.size();
  const int ny = right.size();
  const Eigen::Index rows = 2 * static_cast<Eigen::Index>(da) * da * db * db;
  RealMatrix design(rows, static_cast<Eigen::Index>(nx) * ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      design.col(static_cast<Eigen::Index>(x) * ny + y) =
          vec_real(kron(left.state(x).matrix(), right.state(y).matrix()));

  Eigen::BDCSVD<RealMatrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankCutoffRel);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double zero_cutoff = kRankCutoffRel * sv.maxCoeff();
  double smallest_retained = sv.maxCoeff();
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > zero_cutoff && sv[i] < smallest_retained) smallest_retained = sv[i];
  if (sv.maxCoeff() / smallest_retained > kConditionLimit)
    throw std::runtime_error("solve_gamma: design matrix condition number exceeds 1e12");

  const Eigen::VectorXd target = vec_real(w.matrix());
  const Eigen::VectorXd solution = svd.solve(target);

  const double residual = (design * solution - target).norm();
  if (residual > kDecompositionResidualTol)
    throw std::runtime_error("solve_gamma: ensemble does not span the witness (residual " +
                             std::to_string(residual) + ")");

  RealMatrix gamma(nx, ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) gamma(x, y) = solution[static_cast<Eigen::Index>(x) * ny + y];
  return GammaDecomposition(std::move(gamma), left, right, w);
}

HermitianOperator reconstruct(const RealMatrix& gamma, const ProductEnsemble& left,
                              const ProductEnsemble& right) {
  if (gamma.rows() != left.size() || gamma.cols() != right.size())
    throw std::invalid_argument("reconstruct: gamma shape does not match the ensembles");
  const int n = left.dimension() * right.dimension();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < left.size(); ++x)
    for (int y = 0; y < right.size(); ++y) {
      if (gamma(x, y) == 0.0) continue;
      sum += gamma(x, y) * kron(left.state(x).matrix(), right.state(y).matrix());
    }
  return HermitianOperator(std::move(sum),
                           FactorSpace::bipartite(left.dimension(), right.dimension()));
}

HermitianOperator reconstruct(const GammaDecomposition& dec) {
  return reconstruct(dec.gamma(), dec.left(), dec.right());
}

}  // namespace schmidtcert
