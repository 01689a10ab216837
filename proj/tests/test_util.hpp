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

#include <random>

#include "twirlent/density.hpp"

namespace twirlent::testing {

inline ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  const ComplexMatrix x = random_complex(d, d, rng);
  return 0.5 * (x + x.adjoint());
}

/// G G† / tr(G G†) from a d×rank Ginibre matrix; rank 0 means full rank.
inline DensityMatrix random_density(const BipartiteDims& dims, std::mt19937_64& rng, std::size_t rank = 0) {
  const auto d = static_cast<Eigen::Index>(dims.total());
  const ComplexMatrix g = random_complex(d, rank == 0 ? d : static_cast<Eigen::Index>(rank), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return {rho, dims};
}

inline ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

inline ComplexVector basis(Eigen::Index d, Eigen::Index k) {
  ComplexVector v = ComplexVector::Zero(d);
  v(k) = 1.0;
  return v;
}

}  // namespace twirlent::testing
