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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "twirlent/measures.hpp"

namespace twirlent {

enum class SweepQuantity { Negativity, EofLower, EofUpper, Region };

std::string_view to_string(SweepQuantity q);
SweepQuantity quantity_from_string(std::string_view s);

struct SweepSpec {
  int n = 4;
  int alpha_steps = 41;
  int gamma_steps = 41;
  std::optional<RegionLabel> region_filter;
  SweepQuantity quantity = SweepQuantity::Negativity;

  /// Throws std::invalid_argument on n < 3 or fewer than two steps.
  void validate() const;
};

struct SweepRow {
  double alpha = 0.0;
  double gamma = 0.0;
  double value = 0.0;
  RegionLabel region = RegionLabel::PptSeparable;
};

/// α runs over [0, 1/(2(n−2))] and γ over [0, 1] in uniform steps, α outer.
/// Points with β < 0 are dropped. eof_lower and eof_upper are zero off the
/// NPT region.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Value a sweep reports for one admissible point.
double sweep_value(SweepQuantity q, int n, double alpha, double gamma);

/// Header `alpha,gamma,value`; reals printed with 17 significant digits.
void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out);

std::string format_real(double x);

}  // namespace twirlent
