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

#include "twirlent/sweep.hpp"

#include <cstdio>
#include <stdexcept>

namespace twirlent {

std::string_view to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::Negativity: return "negativity";
    case SweepQuantity::EofLower: return "eof_lower";
    case SweepQuantity::EofUpper: return "eof_upper";
    case SweepQuantity::Region: return "region";
  }
  return "unknown";
}

SweepQuantity quantity_from_string(std::string_view s) {
  if (s == "negativity") return SweepQuantity::Negativity;
  if (s == "eof_lower") return SweepQuantity::EofLower;
  if (s == "eof_upper") return SweepQuantity::EofUpper;
  if (s == "region") return SweepQuantity::Region;
  throw std::invalid_argument("unknown sweep quantity: " + std::string(s));
}

void SweepSpec::validate() const {
  if (n < 3) throw std::invalid_argument("sweep: n must be >= 3");
  if (alpha_steps < 2 || gamma_steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
}

double sweep_value(SweepQuantity q, int n, double alpha, double gamma) {
  const RegionLabel region = classify_region(n, alpha, gamma);
  switch (q) {
    case SweepQuantity::Negativity: return negativity_closed_form(n, alpha, gamma);
    case SweepQuantity::EofLower:
      return region == RegionLabel::NptEntangled ? eof_lower_bound(n, alpha, gamma) : 0.0;
    case SweepQuantity::EofUpper:
      return region == RegionLabel::NptEntangled ? eof_upper_bound(n, alpha, gamma) : 0.0;
    case SweepQuantity::Region: return static_cast<double>(region);
  }
  return 0.0;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const double alpha_max = 1.0 / static_cast<double>(2 * (spec.n - 2));
  std::vector<SweepRow> rows;
  for (int i = 0; i < spec.alpha_steps; ++i) {
    const double alpha = alpha_max * static_cast<double>(i) / static_cast<double>(spec.alpha_steps - 1);
    for (int j = 0; j < spec.gamma_steps; ++j) {
      const double gamma = static_cast<double>(j) / static_cast<double>(spec.gamma_steps - 1);
      const TwoParamState p{spec.n, alpha, gamma};
      try {
        p.validate();
      } catch (const ParameterError&) {
        continue;
      }
      const RegionLabel region = classify_region(spec.n, alpha, gamma);
      if (spec.region_filter && *spec.region_filter != region) continue;
      rows.push_back({alpha, gamma, sweep_value(spec.quantity, spec.n, alpha, gamma), region});
    }
  }
  return rows;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "alpha,gamma,value\n";
  for (const auto& r : rows) {
    out << format_real(r.alpha) << ',' << format_real(r.gamma) << ',';
    if (spec.quantity == SweepQuantity::Region) {
      out << to_string(r.region);
    } else {
      out << format_real(r.value);
    }
    out << '\n';
  }
}

}  // namespace twirlent
