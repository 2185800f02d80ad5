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

#pragma once

#include <vector>

#include "schmidtcert/qlinalg.hpp"
#include "schmidtcert/schmidt.hpp"

namespace schmidtcert {

/// A decomposition is accepted when the reconstruction residual is at most
/// this Frobenius distance.
inline constexpr double kDecompositionResidualTol = 1e-9;

/// Ordered list of single-system density operators used as one side of a
/// product decomposition. The spanning flag records whether the members span
/// the full d^2-dimensional real space of Hermitian operators
/// (informationally complete); it is computed, not asserted.
class ProductEnsemble {
 public:
  explicit ProductEnsemble(std::vector<DensityOperator> states);

  int size() const { return static_cast<int>(states_.size()); }
  int dimension() const { return dim_; }
  bool spanning() const { return spanning_; }
  const DensityOperator& state(int x) const { return states_.at(x); }
  const std::vector<DensityOperator>& states() const { return states_; }

 private:
  std::vector<DensityOperator> states_;
  int dim_ = 0;
  bool spanning_ = false;
};

/// Real coefficient matrix gamma plus the product ensembles reconstructing a
/// witness: target = sum_{x,y} gamma(x,y) left[x] (x) right[y], with
/// Frobenius residual at most kDecompositionResidualTol.
class GammaDecomposition {
 public:
  GammaDecomposition(RealMatrix gamma, ProductEnsemble left, ProductEnsemble right,
                     WitnessOperator target);

  const RealMatrix& gamma() const { return gamma_; }
  const ProductEnsemble& left() const { return left_; }
  const ProductEnsemble& right() const { return right_; }
  const WitnessOperator& target() const { return target_; }
  double residual() const { return residual_; }

 private:
  RealMatrix gamma_;
  ProductEnsemble left_;
  ProductEnsemble right_;
  WitnessOperator target_;
  double residual_ = 0.0;
};

/// The informationally complete qudit ensemble of d^2 rank-one projectors:
/// the computational basis states |i>, then (|i>+|j>)/sqrt(2) for i < j, then
/// (|i>+i|j>)/sqrt(2) for i < j.
ProductEnsemble canonical_ensemble(int d);

/// canonical_ensemble(3): the nine qutrit states, in the standard order.
ProductEnsemble canonical_qutrit_ensemble();

/// Least-squares solution of vec(W) = sum gamma(x,y) vec(left[x] (x)
/// right[y]) over the reals (computational-basis column stacking, real and
/// imaginary parts stacked). Exact and unique when the product family is
/// linearly independent; minimum-norm when overcomplete. Throws if the
/// residual exceeds kDecompositionResidualTol ("ensemble does not span the
/// witness") or the design matrix has condition number above 1e12.
GammaDecomposition solve_gamma(const WitnessOperator& w, const ProductEnsemble& left,
                               const ProductEnsemble& right);

/// sum_{x,y} gamma(x,y) left[x] (x) right[y] as a dense operator.
HermitianOperator reconstruct(const GammaDecomposition& dec);
HermitianOperator reconstruct(const RealMatrix& gamma, const ProductEnsemble& left,
                              const ProductEnsemble& right);

}  // namespace schmidtcert
