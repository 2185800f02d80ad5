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

#include "schmidtcert/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schmidtcert {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

// Offsets of each multi-index over the selected factors, using the strides of
// the full index layout. offsets[k] is the contribution of the k-th
// combination of the selected factors to a flat row/column index.
std::vector<Eigen::Index> subindex_offsets(const std::vector<int>& dims,
                                           const std::vector<int>& selected) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
    strides[i] = strides[i + 1] * dims[i + 1];

  Eigen::Index count = 1;
  for (int f : selected) count *= dims[f];

  std::vector<Eigen::Index> offsets(count, 0);
  Eigen::Index repeat = count;
  for (int f : selected) {
    repeat /= dims[f];
    Eigen::Index idx = 0;
    while (idx < count) {
      for (int v = 0; v < dims[f]; ++v)
        for (Eigen::Index r = 0; r < repeat; ++r)
          offsets[idx++] += v * strides[f];
    }
  }
  return offsets;
}

void check_factor_selection(const std::vector<int>& dims,
                            const std::vector<int>& selected,
                            const char* what) {
  int prev = -1;
  for (int f : selected) {
    require(f > prev && f < static_cast<int>(dims.size()),
            std::string(what) + ": factor indices must be strictly "
                                "increasing and within range");
    prev = f;
  }
}

}  // namespace

int FactorSpace::total_dimension() const {
  int total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("FactorSpace: dimensions must be >= 1");
    total *= d;
  }
  return total;
}

HermitianOperator::HermitianOperator(ComplexMatrix matrix, FactorSpace space)
    : matrix_(std::move(matrix)), space_(std::move(space)) {
  require(matrix_.rows() == matrix_.cols(), "HermitianOperator: matrix must be square");
  require(matrix_.rows() == space_.total_dimension(),
          "HermitianOperator: matrix dimension does not match the factor space");
  require(all_finite(matrix_), "HermitianOperator: entries must be finite");
  const double dev = max_abs(matrix_ - matrix_.adjoint());
  require(dev <= kHermitianTol,
          "HermitianOperator: matrix is not Hermitian (max deviation " +
              std::to_string(dev) + ")");
}

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.trace();
  require(std::abs(tr - 1.0) <= kUnitTraceTol,
          "DensityOperator: trace must be 1, got " + std::to_string(tr));
  require(min_eigenvalue(op_.matrix()) >= -kPsdTol,
          "DensityOperator: operator has a negative eigenvalue");
}

DensityOperator::DensityOperator(ComplexMatrix matrix, FactorSpace space)
    : DensityOperator(HermitianOperator(std::move(matrix), std::move(space))) {}

PureState::PureState(ComplexVector amplitudes, FactorSpace space)
    : amplitudes_(std::move(amplitudes)), space_(std::move(space)) {
  require(amplitudes_.size() == space_.total_dimension(),
          "PureState: amplitude count does not match the factor space");
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i)
    require(std::isfinite(amplitudes_[i].real()) && std::isfinite(amplitudes_[i].imag()),
            "PureState: amplitudes must be finite");
  require(std::abs(amplitudes_.norm() - 1.0) <= kUnitNormTol,
          "PureState: state vector must be normalized");
}

DensityOperator PureState::to_density() const {
  ComplexMatrix m = amplitudes_ * amplitudes_.adjoint();
  return DensityOperator(std::move(m), space_);
}

Povm::Povm(std::vector<HermitianOperator> elements) : elements_(std::move(elements)) {
  require(!elements_.empty(), "Povm: needs at least one element");
  const FactorSpace& space = elements_.front().space();
  ComplexMatrix sum = ComplexMatrix::Zero(elements_.front().dimension(),
                                          elements_.front().dimension());
  for (const HermitianOperator& e : elements_) {
    require(e.space() == space, "Povm: elements must share one space");
    require(min_eigenvalue(e.matrix()) >= -kPovmTol,
            "Povm: element has a negative eigenvalue");
    sum += e.matrix();
  }
  sum -= identity(elements_.front().dimension());
  require(max_abs(sum) <= kPovmTol, "Povm: elements must sum to the identity");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix projector(const ComplexVector& v) {
  ComplexVector n = v / v.norm();
  return n * n.adjoint();
}

ComplexMatrix partial_trace(const ComplexMatrix& matrix,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  FactorSpace space{dims};
  require(matrix.rows() == matrix.cols() &&
              matrix.rows() == space.total_dimension(),
          "partial_trace: matrix does not match the factor dimensions");
  check_factor_selection(dims, keep, "partial_trace");

  std::vector<int> traced;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  const auto keep_off = subindex_offsets(dims, keep);
  const auto tr_off = subindex_offsets(dims, traced);

  ComplexMatrix out = ComplexMatrix::Zero(keep_off.size(), keep_off.size());
  for (std::size_t r = 0; r < keep_off.size(); ++r)
    for (std::size_t c = 0; c < keep_off.size(); ++c) {
      Complex acc = 0.0;
      for (Eigen::Index t : tr_off) acc += matrix(keep_off[r] + t, keep_off[c] + t);
      out(r, c) = acc;
    }
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& op,
                                const std::vector<int>& keep) {
  ComplexMatrix reduced = partial_trace(op.matrix(), op.space().dims, keep);
  std::vector<int> kept_dims;
  for (int f : keep) kept_dims.push_back(op.space().dims[f]);
  return HermitianOperator(std::move(reduced), FactorSpace{kept_dims});
}

HermitianOperator transpose_op(const HermitianOperator& op) {
  return HermitianOperator(op.matrix().transpose(), op.space());
}

PureState max_entangled(int d) {
  if (d < 1) throw std::invalid_argument("max_entangled: d must be >= 1");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) v[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState(std::move(v), FactorSpace::bipartite(d, d));
}

ComplexMatrix max_entangled_projector(int d) {
  return projector(max_entangled(d).amplitudes());
}

ComplexMatrix lift_to_factors(const ComplexMatrix& op,
                              const std::vector<int>& dims,
                              const std::vector<int>& acting_on) {
  check_factor_selection(dims, acting_on, "lift_to_factors");
  std::vector<int> rest;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f)
    if (std::find(acting_on.begin(), acting_on.end(), f) == acting_on.end())
      rest.push_back(f);

  const auto act_off = subindex_offsets(dims, acting_on);
  const auto rest_off = subindex_offsets(dims, rest);
  require(op.rows() == op.cols() &&
              op.rows() == static_cast<Eigen::Index>(act_off.size()),
          "lift_to_factors: operator does not match the selected factors");

  const Eigen::Index total = FactorSpace{dims}.total_dimension();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (std::size_t r = 0; r < act_off.size(); ++r)
    for (std::size_t c = 0; c < act_off.size(); ++c) {
      const Complex v = op(r, c);
      if (v == Complex{0.0, 0.0}) continue;
      for (Eigen::Index e : rest_off) out(act_off[r] + e, act_off[c] + e) = v;
    }
  return out;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.cols() && a.cols() == b.rows(),
          "real_trace_product: incompatible shapes");
  return a.cwiseProduct(b.transpose()).sum().real();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace schmidtcert
