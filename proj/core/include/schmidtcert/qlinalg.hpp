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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace schmidtcert {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Carrier for every operator in the library.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Validation tolerances. All constructed operators in scope are exact
/// rationals plus 1/sqrt(2) factors, so roundoff stays far below these.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitTraceTol = 1e-10;
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kPovmTol = 1e-10;

/// Ordered list of tensor factors with their local dimensions.
///
/// The four-factor game layout is fixed throughout the library as
/// A0 (x) A (x) B (x) B0, with factor 0 the slowest index (Kronecker
/// convention: row = i0*d1*d2*d3 + i1*d2*d3 + i2*d3 + i3).
struct FactorSpace {
  std::vector<int> dims;

  static FactorSpace single(int d) { return FactorSpace{{d}}; }
  static FactorSpace bipartite(int dim_a, int dim_b) {
    return FactorSpace{{dim_a, dim_b}};
  }

  int total_dimension() const;
  int factor_count() const { return static_cast<int>(dims.size()); }
  bool operator==(const FactorSpace&) const = default;
};

/// Two-party split (dimA, dimB) of a composite space.
struct BipartiteSpace {
  int dim_a = 0;
  int dim_b = 0;

  int total_dimension() const { return dim_a * dim_b; }
  FactorSpace factors() const { return FactorSpace::bipartite(dim_a, dim_b); }
  bool operator==(const BipartiteSpace&) const = default;
};

/// Square operator equal to its own adjoint within kHermitianTol.
/// Immutable after construction.
class HermitianOperator {
 public:
  HermitianOperator(ComplexMatrix matrix, FactorSpace space);

  const ComplexMatrix& matrix() const { return matrix_; }
  const FactorSpace& space() const { return space_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }
  /// Trace; the imaginary part vanishes for a Hermitian matrix.
  double trace() const { return matrix_.trace().real(); }

 private:
  ComplexMatrix matrix_;
  FactorSpace space_;
};

/// Positive unit-trace operator: eigenvalues >= -kPsdTol, |trace - 1| <=
/// kUnitTraceTol.
class DensityOperator {
 public:
  explicit DensityOperator(HermitianOperator op);
  DensityOperator(ComplexMatrix matrix, FactorSpace space);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  const FactorSpace& space() const { return op_.space(); }
  int dimension() const { return op_.dimension(); }

 private:
  HermitianOperator op_;
};

/// Unit-norm state vector.
class PureState {
 public:
  PureState(ComplexVector amplitudes, FactorSpace space);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const FactorSpace& space() const { return space_; }
  int dimension() const { return static_cast<int>(amplitudes_.size()); }

  /// Rank-one projector |psi><psi| on the same space.
  DensityOperator to_density() const;

 private:
  ComplexVector amplitudes_;
  FactorSpace space_;
};

/// Positive-operator-valued measure: PSD elements summing to the identity
/// within kPovmTol.
class Povm {
 public:
  Povm(std::vector<HermitianOperator> elements);

  int outcomes() const { return static_cast<int>(elements_.size()); }
  const HermitianOperator& element(int a) const { return elements_.at(a); }
  const std::vector<HermitianOperator>& elements() const { return elements_; }
  const FactorSpace& space() const { return elements_.front().space(); }
  int dimension() const { return elements_.front().dimension(); }

 private:
  std::vector<HermitianOperator> elements_;
};

/// Kronecker product; dimensions multiply, factor lists concatenate.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Identity matrix of size d.
ComplexMatrix identity(int d);

/// Rank-one projector onto (the normalization of) v.
ComplexMatrix projector(const ComplexVector& v);

/// Partial trace over the factors NOT listed in `keep`. `keep` must be a
/// strictly increasing list of factor indices; the surviving factors retain
/// their relative order. Trace-preserving: trace(result) == trace(input).
ComplexMatrix partial_trace(const ComplexMatrix& matrix,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);
HermitianOperator partial_trace(const HermitianOperator& op,
                                const std::vector<int>& keep);

/// Entrywise transpose in the computational basis.
HermitianOperator transpose_op(const HermitianOperator& op);

/// Maximally entangled state (1/sqrt(d)) sum_i |ii> on C^d (x) C^d.
PureState max_entangled(int d);

/// Projector onto max_entangled(d), as a (d*d)-dimensional matrix.
ComplexMatrix max_entangled_projector(int d);

/// Embed an operator acting on the factor subset `acting_on` (strictly
/// increasing indices into `dims`) into the full space, padding the remaining
/// factors with the identity.
ComplexMatrix lift_to_factors(const ComplexMatrix& op,
                              const std::vector<int>& dims,
                              const std::vector<int>& acting_on);

/// Re(tr(A B)) without forming the product.
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius norm of a - b.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace schmidtcert
