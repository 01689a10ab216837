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

#include "twirlent/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twirlent {

namespace {

constexpr double kRegionTol = 1e-12;
// Eigenvalues of a 2⊗2 block below this are treated as exact zeros before
// the spin-flip construction; concurrence is not Lipschitz at rank drops.
constexpr double kConcurrenceRankCut = 1e-14;

TwoParamState admissible(int n, double alpha, double gamma) {
  TwoParamState p{n, alpha, gamma};
  p.validate();
  return p;
}

}  // namespace

std::string_view to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::PptSeparable: return "PPT_SEPARABLE";
    case RegionLabel::NptEntangled: return "NPT_ENTANGLED";
    case RegionLabel::Boundary: return "BOUNDARY";
  }
  return "UNKNOWN";
}

RegionLabel region_from_string(std::string_view s) {
  if (s == "PPT_SEPARABLE") return RegionLabel::PptSeparable;
  if (s == "NPT_ENTANGLED") return RegionLabel::NptEntangled;
  if (s == "BOUNDARY") return RegionLabel::Boundary;
  throw std::invalid_argument("unknown region label: " + std::string(s));
}

double negativity(const DensityMatrix& rho) {
  return trace_norm(partial_transpose(rho.matrix(), rho.dims())) - 1.0;
}

double negativity_closed_form(int n, double alpha, double gamma) {
  admissible(n, alpha, gamma);
  return std::max(static_cast<double>(2 * n - 4) * alpha + 2.0 * gamma - 1.0, 0.0);
}

RegionLabel classify_region(int n, double alpha, double gamma) {
  const double s = admissible(n, alpha, gamma).s();
  if (s < 0.5 - kRegionTol) return RegionLabel::PptSeparable;
  if (s > 0.5 + kRegionTol) return RegionLabel::NptEntangled;
  return RegionLabel::Boundary;
}

double curly_E(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::domain_error("curly_E: c must lie in [0, 1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double concurrence_2x2(const ComplexMatrix& rho4) {
  if (rho4.rows() != 4 || rho4.cols() != 4) throw DimensionError("concurrence_2x2: need a 4x4 matrix");
  if (auto why = density_defect(rho4, BipartiteDims{2, 2}); !why.empty()) {
    throw MatrixPropertyError("concurrence_2x2: " + why);
  }
  // λ_i are the singular values of τ = Xᵀ(σy⊗σy)X for any ρ = XX†.
  const auto eig = hermitian_eig(rho4);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < 4; ++i)
    if (eig.eigenvalues(i) > kConcurrenceRankCut) kept.push_back(i);
  if (kept.empty()) return 0.0;

  ComplexMatrix x(4, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    x.col(static_cast<Eigen::Index>(c)) = std::sqrt(eig.eigenvalues(kept[c])) * eig.eigenvectors.col(kept[c]);
  }
  ComplexMatrix flip = ComplexMatrix::Zero(4, 4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const ComplexMatrix tau = x.transpose() * flip * x;
  Eigen::JacobiSVD<ComplexMatrix> svd(tau);
  RealVector lambda = RealVector::Zero(4);
  lambda.head(svd.singularValues().size()) = svd.singularValues();
  std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
  return std::clamp(lambda(0) - lambda(1) - lambda(2) - lambda(3), 0.0, 1.0);
}

double cllh_lower_bound(const DensityMatrix& rho) {
  const BipartiteDims& d = rho.dims();
  if (d.dA != 2) throw DimensionError("cllh_lower_bound: subsystem A must be a qubit");
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < d.dB; ++i) {
    for (std::size_t j = i + 1; j < d.dB; ++j) {
      const std::array<std::size_t, 4> idx{d.index(0, i), d.index(0, j), d.index(1, i), d.index(1, j)};
      ComplexMatrix block(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          block(r, c) = rho.matrix()(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(r)]),
                                     static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
      const double w = block.trace().real();
      if (w <= kConcurrenceRankCut) continue;
      const double c = w * concurrence_2x2(block / w);
      sum_sq += c * c;
    }
  }
  return curly_E(std::min(std::sqrt(sum_sq), 1.0));
}

double eof_lower_bound(int n, double alpha, double gamma) {
  return curly_E(std::min(negativity_closed_form(n, alpha, gamma), 1.0));
}

double eof_upper_bound(int n, double alpha, double gamma) {
  const auto p = admissible(n, alpha, gamma);
  const double s = p.s();
  if (s <= 0.5 + kRegionTol) {
    throw ParameterError("eof_upper_bound is defined only on the NPT region (s > 1/2)");
  }
  const double slack = 1.0 - s;
  const double tail = static_cast<double>(n - 2) * alpha;
  if (slack <= 0.0 && tail > 0.0) {
    throw ParameterError("eof_upper_bound: s = 1 with alpha > 0 is not admissible");
  }
  const double big_n = std::min(2.0 * s - 1.0, 1.0);
  const double e = curly_E(big_n);
  const double t = tail > 0.0 ? std::clamp(tail / slack, 0.0, 1.0) : 0.0;
  return e + t * (big_n - e);
}

double eof_exact_varrho(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterError("eof_exact_varrho: gamma must lie in [0, 1]");
  return gamma;
}

double eof_exact_werner(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterError("eof_exact_werner: gamma must lie in [0, 1]");
  if (gamma <= 0.5) return 0.0;
  return binary_entropy(0.5 + std::sqrt(gamma * (1.0 - gamma)));
}

double pure_state_entanglement(const ComplexVector& psi, const BipartiteDims& dims) {
  if (static_cast<std::size_t>(psi.size()) != dims.total()) {
    throw DimensionError("pure_state_entanglement: vector length does not match dA*dB");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw MatrixPropertyError("pure_state_entanglement: state is not normalized");
  }
  const ComplexMatrix rho = psi * psi.adjoint();
  ComplexMatrix reduced = partial_trace_B(rho, dims);
  reduced = 0.5 * (reduced + reduced.adjoint());
  reduced /= reduced.trace().real();
  return von_neumann_entropy(reduced);
}

void check_report_invariants(const EntanglementReport& r) {
  auto fail = [](const std::string& what) { throw std::logic_error("report invariant violated: " + what); };
  if (std::abs(r.negativity_spectral - r.negativity_closed) > 1e-10) fail("spectral vs closed negativity");
  if (r.eof_lower > r.eof_upper + 1e-10) fail("eof_lower <= eof_upper");
  if (r.eof_upper > r.negativity_closed + 1e-10) fail("eof_upper <= negativity");
  if (r.cllh_bound && std::abs(*r.cllh_bound - r.eof_lower) > 1e-9) fail("block-concurrence bound vs closed form");
  if (r.eof_roof && *r.eof_roof < r.eof_lower - 1e-6) fail("convex roof >= lower bound");
  if (r.eof_roof && r.eof_exact && std::abs(*r.eof_roof - *r.eof_exact) > 1e-3) {
    fail("convex roof vs exact value");
  }
}

EntanglementReport report(int n, double alpha, double gamma, const ReportOptions& opts) {
  const auto p = admissible(n, alpha, gamma);
  EntanglementReport r;
  r.n = n;
  r.alpha = alpha;
  r.gamma = gamma;
  r.beta = p.beta();
  r.region = classify_region(n, alpha, gamma);

  const DensityMatrix rho = build_two_param_state(p);
  r.negativity_spectral = negativity(rho);
  r.negativity_closed = negativity_closed_form(n, alpha, gamma);
  r.negativity_halved = 0.5 * r.negativity_closed;
  if (r.region == RegionLabel::NptEntangled) {
    r.eof_lower = eof_lower_bound(n, alpha, gamma);
    r.eof_upper = eof_upper_bound(n, alpha, gamma);
  }

  const bool werner_line = std::abs(alpha) <= kRegionTol;
  const bool varrho_line = std::abs(r.beta) <= kRegionTol;
  if (r.region != RegionLabel::NptEntangled) {
    r.eof_exact = 0.0;
  } else if (werner_line) {
    r.eof_exact = eof_exact_werner(gamma);
  } else if (varrho_line) {
    r.eof_exact = eof_exact_varrho(gamma);
  }

  if (opts.with_oracles) {
    r.cllh_bound = cllh_lower_bound(rho);
    if (r.region == RegionLabel::NptEntangled && (werner_line || varrho_line)) {
      ConvexRoofConfig cfg;
      cfg.restarts = opts.roof_restarts;
      cfg.rng_seed = opts.rng_seed;
      r.eof_roof = convex_roof_estimate(rho, cfg).estimate;
    }
    check_report_invariants(r);
  }
  return r;
}

}  // namespace twirlent
