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

#include "twirlent/state_family.hpp"

#include <cmath>
#include <string>

namespace twirlent {

namespace {

constexpr double kRegionSlack = 1e-12;

std::string describe(double x) { return std::to_string(x); }

// Adds w·|φ⟩⟨φ| for |φ⟩ = (|a⟩ ± |b⟩)/√2.
void add_pair_projector(ComplexMatrix& m, std::size_t a, std::size_t b, double w, double sign) {
  const auto ia = static_cast<Eigen::Index>(a);
  const auto ib = static_cast<Eigen::Index>(b);
  const double half = 0.5 * w;
  m(ia, ia) += half;
  m(ib, ib) += half;
  m(ia, ib) += sign * half;
  m(ib, ia) += sign * half;
}

void add_basis_projector(ComplexMatrix& m, std::size_t a, double w) {
  const auto ia = static_cast<Eigen::Index>(a);
  m(ia, ia) += w;
}

}  // namespace

double TwoParamState::beta() const {
  return (1.0 - static_cast<double>(2 * (n - 2)) * alpha - gamma) / 3.0;
}

double TwoParamState::s() const { return static_cast<double>(n - 2) * alpha + gamma; }

BipartiteDims TwoParamState::dims() const { return {2, static_cast<std::size_t>(n)}; }

void TwoParamState::validate() const {
  if (n < 3) throw ParameterError("two-parameter family requires n >= 3, got " + std::to_string(n));
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) {
    throw ParameterError("two-parameter family: non-finite parameter");
  }
  if (alpha < -kRegionSlack) throw ParameterError("alpha must be >= 0, got " + describe(alpha));
  if (gamma < -kRegionSlack) throw ParameterError("gamma must be >= 0, got " + describe(gamma));
  if (beta() < -kRegionSlack) {
    throw ParameterError("derived beta = " + describe(beta()) +
                         " is negative; need 2(n-2)*alpha + gamma <= 1");
  }
}

double HigherDimParams::beta() const {
  const double sym = static_cast<double>(m * (m + 1) / 2);
  return (1.0 - static_cast<double>(m * (n - m)) * alpha -
          static_cast<double>(m * (m - 1) / 2) * gamma) /
         sym;
}

BipartiteDims HigherDimParams::dims() const {
  return {static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
}

void HigherDimParams::validate() const {
  if (m < 2) throw ParameterError("higher-dimensional family requires m >= 2");
  if (n <= m) throw ParameterError("higher-dimensional family requires n > m");
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) {
    throw ParameterError("higher-dimensional family: non-finite parameter");
  }
  if (alpha < -kRegionSlack || gamma < -kRegionSlack) {
    throw ParameterError("alpha and gamma must be >= 0");
  }
  if (beta() < -kRegionSlack) {
    throw ParameterError("derived beta = " + describe(beta()) + " is negative");
  }
}

BellVectors bell_vectors(int n) {
  if (n < 2) throw ParameterError("bell_vectors requires n >= 2");
  const BipartiteDims d{2, static_cast<std::size_t>(n)};
  const auto dim = static_cast<Eigen::Index>(d.total());
  const auto i00 = static_cast<Eigen::Index>(d.index(0, 0));
  const auto i01 = static_cast<Eigen::Index>(d.index(0, 1));
  const auto i10 = static_cast<Eigen::Index>(d.index(1, 0));
  const auto i11 = static_cast<Eigen::Index>(d.index(1, 1));
  const double r = M_SQRT1_2;

  BellVectors b;
  b.phi_plus = ComplexVector::Zero(dim);
  b.phi_minus = ComplexVector::Zero(dim);
  b.psi_plus = ComplexVector::Zero(dim);
  b.psi_minus = ComplexVector::Zero(dim);
  b.phi_plus(i00) = r;
  b.phi_plus(i11) = r;
  b.phi_minus(i00) = r;
  b.phi_minus(i11) = -r;
  b.psi_plus(i01) = r;
  b.psi_plus(i10) = r;
  b.psi_minus(i01) = r;
  b.psi_minus(i10) = -r;
  return b;
}

ComplexMatrix assemble_two_param(int n, double alpha, double beta, double gamma) {
  const BipartiteDims d{2, static_cast<std::size_t>(n)};
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.total()),
                                        static_cast<Eigen::Index>(d.total()));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < d.dB; ++j) add_basis_projector(m, d.index(i, j), alpha);
  add_pair_projector(m, d.index(0, 0), d.index(1, 1), beta, +1.0);   // φ⁺
  add_pair_projector(m, d.index(0, 0), d.index(1, 1), beta, -1.0);   // φ⁻
  add_pair_projector(m, d.index(0, 1), d.index(1, 0), beta, +1.0);   // ψ⁺
  add_pair_projector(m, d.index(0, 1), d.index(1, 0), gamma, -1.0);  // ψ⁻
  return m;
}

DensityMatrix build_two_param_state(const TwoParamState& p) {
  p.validate();
  return {assemble_two_param(p.n, p.alpha, p.beta(), p.gamma), p.dims()};
}

DensityMatrix build_two_param_state(int n, double alpha, double gamma) {
  return build_two_param_state(TwoParamState{n, alpha, gamma});
}

DensityMatrix build_werner_line(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ParameterError("build_werner_line: gamma must lie in [0, 1]");
  }
  return {assemble_two_param(2, 0.0, (1.0 - gamma) / 3.0, gamma), BipartiteDims{2, 2}};
}

DensityMatrix build_varrho(int n, double gamma) {
  if (n < 3) throw ParameterError("build_varrho requires n >= 3");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ParameterError("build_varrho: gamma must lie in [0, 1]");
  }
  const double alpha = (1.0 - gamma) / static_cast<double>(2 * (n - 2));
  return {assemble_two_param(n, alpha, 0.0, gamma), BipartiteDims{2, static_cast<std::size_t>(n)}};
}

DensityMatrix build_higher_dim_state(const HigherDimParams& p) {
  p.validate();
  const BipartiteDims d = p.dims();
  const auto dim = static_cast<Eigen::Index>(d.total());
  const auto m = static_cast<std::size_t>(p.m);
  const double beta = p.beta();

  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = m; j < d.dB; ++j) add_basis_projector(rho, d.index(i, j), p.alpha);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      add_pair_projector(rho, d.index(i, j), d.index(j, i), beta, +1.0);
  for (std::size_t k = 0; k < m; ++k) add_basis_projector(rho, d.index(k, k), beta);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      add_pair_projector(rho, d.index(i, j), d.index(j, i), p.gamma, -1.0);
  return {std::move(rho), d};
}

FamilyParameters extract_parameters(const ComplexMatrix& rho, int n) {
  if (n < 3) throw DimensionError("extract_parameters requires n >= 3");
  const BipartiteDims d{2, static_cast<std::size_t>(n)};
  if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != d.total()) {
    throw DimensionError("extract_parameters: expected a " + std::to_string(d.total()) + "x" +
                         std::to_string(d.total()) + " matrix");
  }
  auto at = [&](std::size_t r, std::size_t c) {
    return rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  };
  double tail = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < d.dB; ++j) tail += at(d.index(i, j), d.index(i, j)).real();

  const std::size_t i01 = d.index(0, 1);
  const std::size_t i10 = d.index(1, 0);
  const Complex singlet = 0.5 * (at(i01, i01) + at(i10, i10) - at(i01, i10) - at(i10, i01));
  return {tail / static_cast<double>(2 * n - 4), singlet.real()};
}

FamilyParameters extract_parameters(const DensityMatrix& rho, int n) {
  return extract_parameters(rho.matrix(), n);
}

double class_residual(const ComplexMatrix& rho, int n) {
  const auto p = extract_parameters(rho, n);
  const double beta = TwoParamState{n, p.alpha, p.gamma}.beta();
  return max_abs_diff(rho, assemble_two_param(n, p.alpha, beta, p.gamma));
}

}  // namespace twirlent
