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

#include "twirlent/density.hpp"

#include <cmath>
#include <utility>

namespace twirlent {

double min_eigenvalue(const ComplexMatrix& a) { return hermitian_eigenvalues(a).minCoeff(); }

std::string density_defect(const ComplexMatrix& m, const BipartiteDims& dims) {
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != dims.total()) {
    return "matrix dimension does not match dA*dB";
  }
  if (!is_hermitian(m)) return "matrix is not Hermitian";
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) return "trace " + std::to_string(tr) + " is not 1";
  const double lo = min_eigenvalue(m);
  if (lo < -kPsdSlack) return "negative eigenvalue " + std::to_string(lo);
  return {};
}

DensityMatrix::DensityMatrix(ComplexMatrix m, BipartiteDims dims)
    : m_(std::move(m)), dims_(dims) {
  if (m_.rows() != m_.cols() || static_cast<std::size_t>(m_.rows()) != dims_.total()) {
    throw DimensionError("DensityMatrix: matrix dimension " + std::to_string(m_.rows()) +
                         " does not match dA*dB = " + std::to_string(dims_.total()));
  }
  if (auto why = density_defect(m_, dims_); !why.empty()) {
    throw MatrixPropertyError("DensityMatrix: " + why);
  }
}

}  // namespace twirlent
