// Copyright 2026 The twirlent Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace twirlent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Global tolerances shared by every module.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdSlack = 1e-12;
inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

/// Raised when the shapes of two operands (or a matrix and its declared
/// bipartite dimensions) do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix fails a structural requirement: Hermiticity,
/// unitarity, positivity, unit trace.
class MatrixPropertyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dimensions of a bipartite system A⊗B. The flat index of |i⟩_A⊗|j⟩_B is
/// i·dB + j everywhere in this library.
struct BipartiteDims {
  std::size_t dA = 0;
  std::size_t dB = 0;

  BipartiteDims() = default;
  BipartiteDims(std::size_t a, std::size_t b);

  [[nodiscard]] std::size_t total() const { return dA * dB; }
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const { return i * dB + j; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct HermitianEigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  [[nodiscard]] ComplexMatrix reconstruct() const;
};

// Structural predicates.
double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kHermitianTol);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

void require_square(const ComplexMatrix& a, const char* what);
void require_hermitian(const ComplexMatrix& a, const char* what, double tol = kHermitianTol);

/// Kronecker product: (A⊗B)[i·dimB + j, i'·dimB + j'] = A[i,i']·B[j,j'].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// Transpose on subsystem B only: ⟨ij|ρ^{T_B}|i'j'⟩ = ⟨ij'|ρ|i'j⟩.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims);

/// Reduced operator on A: ⟨i|σ|i'⟩ = Σ_j ⟨ij|ρ|i'j⟩.
ComplexMatrix partial_trace_B(const ComplexMatrix& rho, const BipartiteDims& dims);

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius mass drops
/// below 1e-13·‖A‖_F. Throws MatrixPropertyError on non-Hermitian input.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& a);

/// Eigenvalues only (same algorithm, skips the vector accumulation).
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

/// Σ|λ_i| for Hermitian input.
double trace_norm(const ComplexMatrix& a);

/// −Σ λ log₂ λ with 0·log 0 = 0, in bits. Eigenvalues in [−1e-9, 0) are
/// clamped to zero; anything more negative, or a trace off by more than
/// 1e-10, is rejected.
double von_neumann_entropy(const ComplexMatrix& rho);

/// h(p) = −p log₂ p − (1−p) log₂(1−p).
double binary_entropy(double p);

/// f(A) = V f(Λ) V† for Hermitian A, with f applied to each eigenvalue.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& a, F&& f) {
  const auto eig = hermitian_eig(a);
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = f(eig.eigenvalues(i));
  return eig.eigenvectors * mapped.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace twirlent
