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

#include "twirlent/density.hpp"

namespace twirlent {

struct ConvexRoofConfig {
  int K = 0;  // decomposition size; 0 means "use the rank"
  int restarts = 20;
  int max_iterations = 4000;
  double step_tolerance = 1e-6;
  std::uint64_t rng_seed = 0;
};

struct ConvexRoofResult {
  double estimate = 0.0;
  int iterations = 0;  // summed over restarts
  int rank = 0;
};

/// Number of eigenvalues above 1e-10.
int numerical_rank(const ComplexMatrix& rho);

/// Average entanglement Σ_k p_k E(φ_k) of the ensemble √p_k|φ_k⟩ = Σ_i U_ki w_i,
/// where w_i = √λ_i |e_i⟩ are the scaled eigenvectors of ρ (HJW form).
/// `u` is K×K unitary and `scaled` holds the w_i as its first columns.
double ensemble_entanglement(const ComplexMatrix& u, const ComplexMatrix& scaled,
                             const BipartiteDims& dims);

/// Upper estimate of the entanglement of formation: minimizes the ensemble
/// average over K×K unitaries by Riemannian gradient descent on U(K) from
/// Haar-random starts, returning the best value over all restarts.
ConvexRoofResult convex_roof_estimate(const DensityMatrix& rho, const ConvexRoofConfig& cfg);

}  // namespace twirlent
