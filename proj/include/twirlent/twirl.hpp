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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "twirlent/density.hpp"

namespace twirlent {

/// Element of G(2,n): a unitary on C^n that preserves span{|0⟩,|1⟩} and its
/// orthogonal complement. The 2×2 block doubles as the subsystem-A unitary,
/// so the bilateral action is block_a ⊗ matrix().
class LocalUnitary {
 public:
  LocalUnitary(ComplexMatrix block_a, ComplexMatrix block_b);

  /// Splits an n×n block-diagonal unitary; throws if it mixes the blocks.
  static LocalUnitary from_matrix(const ComplexMatrix& u);
  static LocalUnitary identity(int n);

  [[nodiscard]] int n() const { return static_cast<int>(block_a_.rows() + block_b_.rows()); }
  [[nodiscard]] const ComplexMatrix& block_a() const { return block_a_; }
  [[nodiscard]] const ComplexMatrix& block_b() const { return block_b_; }
  /// Assembled n×n matrix.
  [[nodiscard]] ComplexMatrix matrix() const;
  /// block_a ⊗ matrix(), acting on C^{2n}.
  [[nodiscard]] ComplexMatrix bilateral() const;

 private:
  ComplexMatrix block_a_;
  ComplexMatrix block_b_;
};

struct MixtureBranch {
  double probability = 0.0;
  ComplexMatrix unitary;  // 2n×2n bilateral operator
};

/// One probabilistic step ρ ↦ Σ p_k V_k ρ V_k†.
struct MixtureStep {
  std::string label;
  std::vector<MixtureBranch> branches;

  [[nodiscard]] ComplexMatrix apply(const ComplexMatrix& rho) const;
};

// Single-site unitaries on C^n used by the protocol.
ComplexMatrix u_theta(int n, double theta);
ComplexMatrix u_flip_k(int n, int k);
ComplexMatrix u_swap01(int n);
ComplexMatrix u_cycle_T(int n);
ComplexMatrix u_hadamard_H(int n);

/// (Ũ_A ⊗ U) ρ (Ũ_A ⊗ U)† where Ũ_A is the leading 2×2 block of U.
/// Requires U unitary and block-preserving within 1e-12.
DensityMatrix apply_bilateral(const DensityMatrix& rho, const ComplexMatrix& u);
ComplexMatrix apply_bilateral(const ComplexMatrix& rho, const LocalUnitary& u);

/// Ordered protocol: S1 U_π, S2 U_k for k = 2..n−1, S3 U_{π/2}, S4 U_01,
/// S5 average over T^j, S6 {⅔ H, ⅓ I}, then S1–S5 once more.
std::vector<MixtureStep> protocol_steps(int n);

/// Number of Kraus branches if the pipeline were expanded (it never is).
std::uint64_t total_branch_count(std::span<const MixtureStep> steps);

/// Exact, deterministic application of protocol_steps(n).
DensityMatrix twirl_pipeline(const DensityMatrix& rho, int n);
ComplexMatrix twirl_pipeline(const ComplexMatrix& rho, int n);

/// Haar-random element of G(2,n): each block is Q·diag(R_ii/|R_ii|) from the
/// QR factorization of a complex Gaussian matrix.
LocalUnitary sample_g2n(int n, std::uint64_t rng_seed);
LocalUnitary sample_g2n(int n, std::mt19937_64& rng);

/// Haar-random unitary on C^d.
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

/// (1/S)·Σ_s (U_s⊗U_s) ρ (U_s⊗U_s)†.
DensityMatrix average_bilateral(const DensityMatrix& rho, std::span<const LocalUnitary> unitaries);

/// Monte-Carlo estimate of the G(2,n) twirl; n is taken from rho.dims().dB.
DensityMatrix monte_carlo_twirl(const DensityMatrix& rho, int samples, std::uint64_t rng_seed);

/// Max over sampled U of the entrywise deviation of (U⊗U)ρ(U⊗U)† from ρ.
double check_uu_invariance(const DensityMatrix& rho, int samples, std::uint64_t rng_seed);

/// ½‖ρ − σ‖₁.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace twirlent
