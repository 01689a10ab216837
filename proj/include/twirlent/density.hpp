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

#include "twirlent/linalg.hpp"

namespace twirlent {

/// A Hermitian, unit-trace, positive-semidefinite matrix carrying its
/// bipartite split. Construction validates all three properties.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix m, BipartiteDims dims);

  [[nodiscard]] const ComplexMatrix& matrix() const { return m_; }
  [[nodiscard]] const BipartiteDims& dims() const { return dims_; }
  [[nodiscard]] std::size_t dim() const { return dims_.total(); }

 private:
  ComplexMatrix m_;
  BipartiteDims dims_;
};

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& a);

/// Validation without construction; returns an empty string when `m` is a
/// valid density matrix for `dims`, otherwise the reason.
std::string density_defect(const ComplexMatrix& m, const BipartiteDims& dims);

}  // namespace twirlent
