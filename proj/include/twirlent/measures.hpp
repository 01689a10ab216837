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

#include <optional>
#include <string_view>

#include "twirlent/convex_roof.hpp"
#include "twirlent/density.hpp"
#include "twirlent/state_family.hpp"

namespace twirlent {

enum class RegionLabel { PptSeparable, NptEntangled, Boundary };

std::string_view to_string(RegionLabel r);
RegionLabel region_from_string(std::string_view s);

/// 𝒩(ρ) = ‖ρ^{T_B}‖₁ − 1 (un-halved: maximally entangled pure states score 1).
double negativity(const DensityMatrix& rho);

/// max{(2n−4)α + 2γ − 1, 0}.
double negativity_closed_form(int n, double alpha, double gamma);

/// Decided by s = (n−2)α + γ against 1/2 with a 1e-12 dead band.
RegionLabel classify_region(int n, double alpha, double gamma);

/// 𝓔(c) = h((1 + √(1 − c²)) / 2).
double curly_E(double c);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence_2x2(const ComplexMatrix& rho4);

/// Lower bound 𝓔(√Σ_{i<j} C_ij²) where C_ij is the concurrence of the
/// (unnormalized) 2⊗2 block on {|0i⟩, |1i⟩, |0j⟩, |1j⟩}. Requires dA = 2.
double cllh_lower_bound(const DensityMatrix& rho);

/// 𝓔(𝒩) for the family; zero when the state is PPT.
double eof_lower_bound(int n, double alpha, double gamma);

/// Convexity upper bound on the NPT region, 𝓔(N) + t·(N − 𝓔(N)) with
/// N = 2s − 1 and t = (n−2)α/(1 − s). Throws ParameterError outside NPT.
double eof_upper_bound(int n, double alpha, double gamma);

/// Exact value on the β = 0 line: E_f(ϱ_γ) = γ.
double eof_exact_varrho(double gamma);

/// Exact value on the α = 0 line: 0 for γ ≤ 1/2, else h(1/2 + √(γ(1−γ))).
double eof_exact_werner(double gamma);

/// S(tr_B |ψ⟩⟨ψ|) in bits.
double pure_state_entanglement(const ComplexVector& psi, const BipartiteDims& dims);

struct EntanglementReport {
  int n = 0;
  double alpha = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  RegionLabel region = RegionLabel::PptSeparable;
  double negativity_spectral = 0.0;
  double negativity_closed = 0.0;
  /// Vidal–Werner convention (𝒩/2); informational only.
  double negativity_halved = 0.0;
  double eof_lower = 0.0;
  double eof_upper = 0.0;
  std::optional<double> eof_exact;
  // Filled only when oracles run.
  std::optional<double> cllh_bound;
  std::optional<double> eof_roof;
};

struct ReportOptions {
  bool with_oracles = false;
  std::uint64_t rng_seed = 0;
  int roof_restarts = 20;
};

/// Assembles every measure for the family member (n, α, γ). With oracles,
/// also evaluates the block-concurrence bound spectrally and, on the α = 0 and β = 0
/// lines, the convex-roof estimator, and throws std::logic_error if any
/// report invariant fails.
EntanglementReport report(int n, double alpha, double gamma, const ReportOptions& opts = {});

/// Throws std::logic_error describing the first violated invariant.
void check_report_invariants(const EntanglementReport& r);

}  // namespace twirlent
