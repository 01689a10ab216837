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

#include "twirlent/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "twirlent/twirl.hpp"

namespace twirlent {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kEigenFloor = 1e-300;
constexpr int kPassLength = 25;

// The dA×dB coefficient matrix of a vector on A⊗B.
ComplexMatrix reshape(const ComplexVector& v, const BipartiteDims& dims) {
  ComplexMatrix m(dims.dA, dims.dB);
  for (std::size_t i = 0; i < dims.dA; ++i)
    for (std::size_t j = 0; j < dims.dB; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          v(static_cast<Eigen::Index>(dims.index(i, j)));
  return m;
}

// p·S(σ/p) in bits for an unnormalized reduced state σ with trace p.
double weighted_entropy(const RealVector& mu) {
  double p = 0.0;
  double s = 0.0;
  for (Eigen::Index a = 0; a < mu.size(); ++a) {
    const double x = std::max(mu(a), 0.0);
    p += x;
    if (x > 0.0) s -= x * std::log2(x);
  }
  if (p > 0.0) s += p * std::log2(p);
  return std::max(s, 0.0);
}

struct Evaluation {
  double value = 0.0;
  ComplexMatrix gradient;  // Euclidean gradient Γ with respect to U
};

class RoofObjective {
 public:
  RoofObjective(ComplexMatrix scaled, BipartiteDims dims)
      : scaled_(std::move(scaled)), dims_(dims) {
    for (Eigen::Index i = 0; i < scaled_.cols(); ++i) blocks_.push_back(reshape(scaled_.col(i), dims_));
  }

  [[nodiscard]] double value(const ComplexMatrix& u) const {
    const ComplexMatrix v = scaled_ * u.leftCols(scaled_.cols()).transpose();
    double total = 0.0;
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
      const ComplexMatrix m = reshape(v.col(k), dims_);
      const ComplexMatrix sigma = m * m.adjoint();
      if (sigma.trace().real() <= 0.0) continue;
      total += weighted_entropy(hermitian_eigenvalues(0.5 * (sigma + sigma.adjoint())));
    }
    return total;
  }

  [[nodiscard]] Evaluation evaluate(const ComplexMatrix& u) const {
    const Eigen::Index kdim = u.rows();
    const Eigen::Index r = scaled_.cols();
    const ComplexMatrix v = scaled_ * u.leftCols(r).transpose();
    Evaluation out{0.0, ComplexMatrix::Zero(kdim, kdim)};
    for (Eigen::Index k = 0; k < kdim; ++k) {
      const ComplexMatrix m = reshape(v.col(k), dims_);
      const ComplexMatrix sigma = m * m.adjoint();
      const double p = sigma.trace().real();
      if (p <= 0.0) continue;
      const auto eig = hermitian_eig(0.5 * (sigma + sigma.adjoint()));
      out.value += weighted_entropy(eig.eigenvalues);

      // G = (ln p·I − ln σ)/ln 2, applied to M through σ's eigenbasis.
      RealVector g(eig.eigenvalues.size());
      for (Eigen::Index a = 0; a < g.size(); ++a) {
        g(a) = (std::log(p) - std::log(std::max(eig.eigenvalues(a), kEigenFloor))) / std::numbers::ln2;
      }
      const ComplexMatrix gm = eig.eigenvectors * g.cast<Complex>().asDiagonal() *
                               (eig.eigenvectors.adjoint() * m);
      for (Eigen::Index i = 0; i < r; ++i) {
        out.gradient(k, i) = 2.0 * (blocks_[static_cast<std::size_t>(i)].adjoint() * gm).trace();
      }
    }
    return out;
  }

 private:
  ComplexMatrix scaled_;
  BipartiteDims dims_;
  std::vector<ComplexMatrix> blocks_;
};

// exp(−η·A) for anti-Hermitian A.
ComplexMatrix unitary_step(const ComplexMatrix& anti, double eta) {
  const ComplexMatrix h = Complex(0.0, -1.0) * anti;  // Hermitian
  const auto eig = hermitian_eig(0.5 * (h + h.adjoint()));
  Eigen::VectorXcd phases(eig.eigenvalues.size());
  for (Eigen::Index a = 0; a < phases.size(); ++a) phases(a) = std::polar(1.0, -eta * eig.eigenvalues(a));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

struct DescentResult {
  double value = 0.0;
  int iterations = 0;
};

DescentResult descend(const RoofObjective& f, ComplexMatrix u, const ConvexRoofConfig& cfg) {
  Evaluation cur = f.evaluate(u);
  double eta = 0.05;
  double pass_start = cur.value;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    const ComplexMatrix b = u * cur.gradient.adjoint();
    const ComplexMatrix anti = 0.5 * (b.adjoint() - b);
    if (anti.norm() < 1e-12) break;

    bool accepted = false;
    while (eta > 1e-14) {
      const ComplexMatrix trial = unitary_step(anti, eta) * u;
      const double val = f.value(trial);
      if (val < cur.value) {
        u = trial;
        cur = f.evaluate(u);
        eta = std::min(eta * 1.5, 10.0);
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;

    if ((it + 1) % kPassLength == 0) {
      if (pass_start - cur.value < cfg.step_tolerance) {
        ++it;
        break;
      }
      pass_start = cur.value;
    }
  }
  return {cur.value, it};
}

}  // namespace

int numerical_rank(const ComplexMatrix& rho) {
  const RealVector lambda = hermitian_eigenvalues(rho);
  return static_cast<int>((lambda.array() > kRankThreshold).count());
}

double ensemble_entanglement(const ComplexMatrix& u, const ComplexMatrix& scaled,
                             const BipartiteDims& dims) {
  if (u.rows() != u.cols() || u.cols() < scaled.cols()) {
    throw DimensionError("ensemble_entanglement: U must be KxK with K >= number of vectors");
  }
  return RoofObjective(scaled, dims).value(u);
}

ConvexRoofResult convex_roof_estimate(const DensityMatrix& rho, const ConvexRoofConfig& cfg) {
  const auto eig = hermitian_eig(rho.matrix());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = eig.eigenvalues.size(); i-- > 0;) {
    if (eig.eigenvalues(i) > kRankThreshold) support.push_back(i);
  }
  const int rank = static_cast<int>(support.size());
  const int k = cfg.K == 0 ? rank : cfg.K;
  if (k < rank) {
    throw std::invalid_argument("convex_roof_estimate: K = " + std::to_string(k) +
                                " is below the rank " + std::to_string(rank));
  }
  if (cfg.restarts < 1) throw std::invalid_argument("convex_roof_estimate: restarts must be >= 1");

  ComplexMatrix scaled(rho.matrix().rows(), rank);
  for (int i = 0; i < rank; ++i) {
    const Eigen::Index src = support[static_cast<std::size_t>(i)];
    scaled.col(i) = std::sqrt(eig.eigenvalues(src)) * eig.eigenvectors.col(src);
  }
  const RoofObjective objective(scaled, rho.dims());

  ConvexRoofResult out;
  out.rank = rank;
  if (k == 1) {
    out.estimate = objective.value(ComplexMatrix::Identity(1, 1));
    return out;
  }

  std::mt19937_64 rng(cfg.rng_seed);
  out.estimate = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    const auto res = descend(objective, haar_unitary(k, rng), cfg);
    out.estimate = std::min(out.estimate, res.value);
    out.iterations += res.iterations;
  }
  return out;
}

}  // namespace twirlent
