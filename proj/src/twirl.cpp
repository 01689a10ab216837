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

#include "twirlent/twirl.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "twirlent/state_family.hpp"

namespace twirlent {

namespace {

void require_protocol_n(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw DimensionError(std::string(what) + " requires n >= " + std::to_string(min_n));
  }
}

ComplexMatrix diagonal(const Eigen::VectorXcd& d) { return d.asDiagonal(); }

}  // namespace

LocalUnitary::LocalUnitary(ComplexMatrix block_a, ComplexMatrix block_b)
    : block_a_(std::move(block_a)), block_b_(std::move(block_b)) {
  if (block_a_.rows() != 2 || block_a_.cols() != 2) {
    throw DimensionError("LocalUnitary: leading block must be 2x2");
  }
  require_square(block_b_, "LocalUnitary tail block");
  if (!is_unitary(block_a_) || !is_unitary(block_b_)) {
    throw MatrixPropertyError("LocalUnitary: blocks must be unitary within 1e-12");
  }
}

LocalUnitary LocalUnitary::from_matrix(const ComplexMatrix& u) {
  require_square(u, "LocalUnitary::from_matrix");
  const Eigen::Index n = u.rows();
  if (n < 3) throw DimensionError("LocalUnitary::from_matrix requires n >= 3");
  const double leak = std::max(u.topRightCorner(2, n - 2).cwiseAbs().maxCoeff(),
                               u.bottomLeftCorner(n - 2, 2).cwiseAbs().maxCoeff());
  if (leak > kHermitianTol) {
    throw MatrixPropertyError("unitary does not preserve span{|0>,|1>} (leak " +
                              std::to_string(leak) + ")");
  }
  return {u.topLeftCorner(2, 2), u.bottomRightCorner(n - 2, n - 2)};
}

LocalUnitary LocalUnitary::identity(int n) {
  require_protocol_n(n, 3, "LocalUnitary::identity");
  return {ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(n - 2, n - 2)};
}

ComplexMatrix LocalUnitary::matrix() const {
  const Eigen::Index d = n();
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  u.topLeftCorner(2, 2) = block_a_;
  u.bottomRightCorner(d - 2, d - 2) = block_b_;
  return u;
}

ComplexMatrix LocalUnitary::bilateral() const { return tensor_product(block_a_, matrix()); }

ComplexMatrix MixtureStep::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& b : branches) out += b.probability * (b.unitary * rho * b.unitary.adjoint());
  return out;
}

ComplexMatrix u_theta(int n, double theta) {
  require_protocol_n(n, 1, "u_theta");
  Eigen::VectorXcd d(n);
  for (int j = 0; j < n; ++j) d(j) = std::polar(1.0, theta * j);
  return diagonal(d);
}

ComplexMatrix u_flip_k(int n, int k) {
  if (k < 2 || k > n - 1) {
    throw std::out_of_range("u_flip_k: k must lie in [2, n-1], got " + std::to_string(k));
  }
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  u(k, k) = -1.0;
  return u;
}

ComplexMatrix u_swap01(int n) {
  require_protocol_n(n, 2, "u_swap01");
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  u(0, 0) = 0.0;
  u(1, 1) = 0.0;
  u(0, 1) = 1.0;
  u(1, 0) = 1.0;
  return u;
}

ComplexMatrix u_cycle_T(int n) {
  require_protocol_n(n, 3, "u_cycle_T");
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  // Column j is the image of |j⟩: |j⟩ ↦ |j+1⟩ on the tail, |n−1⟩ ↦ |2⟩.
  for (int j = 2; j < n; ++j) u(j + 1 < n ? j + 1 : 2, j) = 1.0;
  return u;
}

ComplexMatrix u_hadamard_H(int n) {
  require_protocol_n(n, 2, "u_hadamard_H");
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  const double r = M_SQRT1_2;
  u(0, 0) = r;
  u(0, 1) = r;
  u(1, 0) = r;
  u(1, 1) = -r;
  return u;
}

DensityMatrix apply_bilateral(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (rho.dims().dA != 2 || static_cast<Eigen::Index>(rho.dims().dB) != u.rows()) {
    throw DimensionError("apply_bilateral: state must be 2⊗n with n matching the unitary");
  }
  if (!is_unitary(u)) throw MatrixPropertyError("apply_bilateral: operator is not unitary");
  return {apply_bilateral(rho.matrix(), LocalUnitary::from_matrix(u)), rho.dims()};
}

ComplexMatrix apply_bilateral(const ComplexMatrix& rho, const LocalUnitary& u) {
  const ComplexMatrix v = u.bilateral();
  if (v.rows() != rho.rows()) throw DimensionError("apply_bilateral: dimension mismatch");
  return v * rho * v.adjoint();
}

namespace {

MixtureStep coin(std::string label, const ComplexMatrix& u, double p) {
  const auto lu = LocalUnitary::from_matrix(u);
  const Eigen::Index d = 2 * lu.n();
  return {std::move(label), {{p, lu.bilateral()}, {1.0 - p, ComplexMatrix::Identity(d, d)}}};
}

void append_diagonalizing_sequence(std::vector<MixtureStep>& steps, int n) {
  constexpr double pi = std::numbers::pi;
  steps.push_back(coin("U_pi", u_theta(n, pi), 0.5));
  for (int k = 2; k < n; ++k) steps.push_back(coin("U_" + std::to_string(k), u_flip_k(n, k), 0.5));
  steps.push_back(coin("U_pi/2", u_theta(n, pi / 2.0), 0.5));
  steps.push_back(coin("U_01", u_swap01(n), 0.5));

  MixtureStep cycle{"T_average", {}};
  const ComplexMatrix t = u_cycle_T(n);
  ComplexMatrix tj = ComplexMatrix::Identity(n, n);
  const double p = 1.0 / static_cast<double>(n - 2);
  for (int j = 0; j < n - 2; ++j) {
    cycle.branches.push_back({p, LocalUnitary::from_matrix(tj).bilateral()});
    tj = t * tj;
  }
  steps.push_back(std::move(cycle));
}

}  // namespace

std::vector<MixtureStep> protocol_steps(int n) {
  require_protocol_n(n, 3, "protocol_steps");
  std::vector<MixtureStep> steps;
  append_diagonalizing_sequence(steps, n);
  steps.push_back(coin("H", u_hadamard_H(n), 2.0 / 3.0));
  append_diagonalizing_sequence(steps, n);
  return steps;
}

std::uint64_t total_branch_count(std::span<const MixtureStep> steps) {
  std::uint64_t count = 1;
  for (const auto& s : steps) count *= s.branches.size();
  return count;
}

ComplexMatrix twirl_pipeline(const ComplexMatrix& rho, int n) {
  require_protocol_n(n, 3, "twirl_pipeline");
  if (rho.rows() != 2 * n || rho.cols() != 2 * n) {
    throw DimensionError("twirl_pipeline: expected a " + std::to_string(2 * n) + "x" +
                         std::to_string(2 * n) + " matrix");
  }
  ComplexMatrix out = rho;
  for (const auto& step : protocol_steps(n)) out = step.apply(out);
  return out;
}

DensityMatrix twirl_pipeline(const DensityMatrix& rho, int n) {
  if (rho.dims() != BipartiteDims{2, static_cast<std::size_t>(n)}) {
    throw DimensionError("twirl_pipeline: state dims must be (2, n)");
  }
  return {twirl_pipeline(rho.matrix(), n), rho.dims()};
}

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, M_SQRT1_2);
  ComplexMatrix z(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = {re, im};
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

LocalUnitary sample_g2n(int n, std::mt19937_64& rng) {
  require_protocol_n(n, 3, "sample_g2n");
  ComplexMatrix a = haar_unitary(2, rng);
  ComplexMatrix b = haar_unitary(n - 2, rng);
  return {std::move(a), std::move(b)};
}

LocalUnitary sample_g2n(int n, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return sample_g2n(n, rng);
}

DensityMatrix average_bilateral(const DensityMatrix& rho,
                                std::span<const LocalUnitary> unitaries) {
  if (unitaries.empty()) throw std::invalid_argument("average_bilateral: no unitaries");
  ComplexMatrix acc = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& u : unitaries) acc += apply_bilateral(rho.matrix(), u);
  acc /= static_cast<double>(unitaries.size());
  return {std::move(acc), rho.dims()};
}

DensityMatrix monte_carlo_twirl(const DensityMatrix& rho, int samples, std::uint64_t rng_seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_twirl: samples must be >= 1");
  if (rho.dims().dA != 2) throw DimensionError("monte_carlo_twirl: state must be 2⊗n");
  const int n = static_cast<int>(rho.dims().dB);
  std::mt19937_64 rng(rng_seed);
  ComplexMatrix acc = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (int s = 0; s < samples; ++s) acc += apply_bilateral(rho.matrix(), sample_g2n(n, rng));
  acc /= static_cast<double>(samples);
  return {std::move(acc), rho.dims()};
}

double check_uu_invariance(const DensityMatrix& rho, int samples, std::uint64_t rng_seed) {
  if (samples < 1) throw std::invalid_argument("check_uu_invariance: samples must be >= 1");
  if (rho.dims().dA != 2) throw DimensionError("check_uu_invariance: state must be 2⊗n");
  const int n = static_cast<int>(rho.dims().dB);
  std::mt19937_64 rng(rng_seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix moved = apply_bilateral(rho.matrix(), sample_g2n(n, rng));
    worst = std::max(worst, max_abs_diff(moved, rho.matrix()));
  }
  return worst;
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("trace_distance: shape mismatch");
  }
  const ComplexMatrix diff = rho - sigma;
  return 0.5 * trace_norm(0.5 * (diff + diff.adjoint()));
}

}  // namespace twirlent
