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

#include <stdexcept>

#include "twirlent/density.hpp"

namespace twirlent {

/// Parameters outside the admissible region of a state family.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Member (n, α, γ) of the two-parameter 2⊗n family. β follows from unit
/// trace: 2(n−2)α + 3β + γ = 1.
struct TwoParamState {
  int n = 3;
  double alpha = 0.0;
  double gamma = 0.0;

  [[nodiscard]] double beta() const;
  /// s = (n−2)α + γ, the coordinate that decides PPT vs NPT.
  [[nodiscard]] double s() const;
  [[nodiscard]] BipartiteDims dims() const;

  /// Throws ParameterError unless n ≥ 3, α ≥ 0, γ ≥ 0, β ≥ −1e-12.
  void validate() const;
};

/// m⊗n generalization: m(n−m)α + m(m+1)/2·β + m(m−1)/2·γ = 1.
struct HigherDimParams {
  int m = 2;
  int n = 3;
  double alpha = 0.0;
  double gamma = 0.0;

  [[nodiscard]] double beta() const;
  [[nodiscard]] BipartiteDims dims() const;
  void validate() const;
};

struct BellVectors {
  ComplexVector phi_plus;
  ComplexVector phi_minus;
  ComplexVector psi_plus;
  ComplexVector psi_minus;
};

/// The four Bell vectors on span{|00⟩,|01⟩,|10⟩,|11⟩}, embedded in C^{2n}.
BellVectors bell_vectors(int n);

DensityMatrix build_two_param_state(const TwoParamState& p);
DensityMatrix build_two_param_state(int n, double alpha, double gamma);

/// The α = 0 line as a 2⊗2 state.
DensityMatrix build_werner_line(double gamma);

/// The β = 0 line, ϱ_γ = (1−γ)/(2(n−2))·Σ|ij⟩⟨ij| + γ|ψ⁻⟩⟨ψ⁻|.
DensityMatrix build_varrho(int n, double gamma);

DensityMatrix build_higher_dim_state(const HigherDimParams& p);

struct FamilyParameters {
  double alpha = 0.0;
  double gamma = 0.0;
};

/// α = Σ_{i, j≥2} ⟨ij|ρ|ij⟩ / (2n−4) and γ = ⟨ψ⁻|ρ|ψ⁻⟩. Both functionals are
/// conserved by the twirl, so these are the twirl output's parameters.
FamilyParameters extract_parameters(const ComplexMatrix& rho, int n);
FamilyParameters extract_parameters(const DensityMatrix& rho, int n);

/// Family member with explicit (α, β, γ) and no admissibility checks.
ComplexMatrix assemble_two_param(int n, double alpha, double beta, double gamma);

/// Max entrywise distance between ρ and the family member sharing its
/// extracted parameters. Zero exactly on the family.
double class_residual(const ComplexMatrix& rho, int n);

}  // namespace twirlent
