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

#include "twirlent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace twirlent {

BipartiteDims::BipartiteDims(std::size_t a, std::size_t b) : dA(a), dB(b) {
  if (a == 0 || b == 0) throw DimensionError("bipartite dimensions must be positive");
}

ComplexMatrix HermitianEigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) { return hermiticity_defect(a) <= tol; }

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol) { return unitarity_defect(u) <= tol; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix");
  }
}

void require_hermitian(const ComplexMatrix& a, const char* what, double tol) {
  require_square(a, what);
  if (!is_hermitian(a, tol)) {
    throw MatrixPropertyError(std::string(what) + ": matrix is not Hermitian (defect " +
                              std::to_string(hermiticity_defect(a)) + ")");
  }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {

void require_bipartite(const ComplexMatrix& rho, const BipartiteDims& dims, const char* what) {
  require_square(rho, what);
  if (static_cast<std::size_t>(rho.rows()) != dims.total()) {
    throw DimensionError(std::string(what) + ": matrix dimension " + std::to_string(rho.rows()) +
                         " does not match dA*dB = " + std::to_string(dims.total()));
  }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims) {
  require_bipartite(rho, dims, "partial_transpose");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < dims.dA; ++i)
    for (std::size_t j = 0; j < dims.dB; ++j)
      for (std::size_t ip = 0; ip < dims.dA; ++ip)
        for (std::size_t jp = 0; jp < dims.dB; ++jp)
          out(dims.index(i, j), dims.index(ip, jp)) = rho(dims.index(i, jp), dims.index(ip, j));
  return out;
}

ComplexMatrix partial_trace_B(const ComplexMatrix& rho, const BipartiteDims& dims) {
  require_bipartite(rho, dims, "partial_trace_B");
  ComplexMatrix out = ComplexMatrix::Zero(dims.dA, dims.dA);
  for (std::size_t i = 0; i < dims.dA; ++i)
    for (std::size_t ip = 0; ip < dims.dA; ++ip)
      for (std::size_t j = 0; j < dims.dB; ++j)
        out(i, ip) += rho(dims.index(i, j), dims.index(ip, j));
  return out;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRelTol = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with G = D·R, where D rephases column q so that a(p,q)
// becomes real and R is the classical real Jacobi rotation.
void rotate(ComplexMatrix& a, ComplexMatrix* v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{iφ}
  const Complex unphase = std::conj(phase);

  a.col(q) *= unphase;
  a.row(q) *= phase;
  if (v != nullptr) v->col(q) *= unphase;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const ComplexVector colp = a.col(p);
  a.col(p) = c * colp - s * a.col(q);
  a.col(q) = s * colp + c * a.col(q);
  const Eigen::RowVectorXcd rowp = a.row(p);
  a.row(p) = c * rowp - s * a.row(q);
  a.row(q) = s * rowp + c * a.row(q);
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  if (v != nullptr) {
    const ComplexVector vp = v->col(p);
    v->col(p) = c * vp - s * v->col(q);
    v->col(q) = s * vp + c * v->col(q);
  }
}

void jacobi(ComplexMatrix& a, ComplexMatrix* v) {
  const Eigen::Index d = a.rows();
  const double threshold = kOffDiagonalRelTol * a.norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    for (Eigen::Index p = 0; p + 1 < d; ++p)
      for (Eigen::Index q = p + 1; q < d; ++q) rotate(a, v, p, q);
  }
  throw MatrixPropertyError("hermitian_eig: Jacobi iteration did not converge");
}

std::vector<Eigen::Index> ascending_order(const ComplexMatrix& a) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(a.rows()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
  return order;
}

}  // namespace

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eig");
  ComplexMatrix work = 0.5 * (a + a.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(a.rows(), a.cols());
  jacobi(work, &v);

  const auto order = ascending_order(work);
  HermitianEigenDecomposition out;
  out.eigenvalues.resize(a.rows());
  out.eigenvectors.resize(a.rows(), a.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    out.eigenvalues(idx) = work(order[k], order[k]).real();
    out.eigenvectors.col(idx) = v.col(order[k]);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eigenvalues");
  ComplexMatrix work = 0.5 * (a + a.adjoint());
  jacobi(work, nullptr);
  const auto order = ascending_order(work);
  RealVector out(a.rows());
  for (std::size_t k = 0; k < order.size(); ++k)
    out(static_cast<Eigen::Index>(k)) = work(order[k], order[k]).real();
  return out;
}

double trace_norm(const ComplexMatrix& a) { return hermitian_eigenvalues(a).cwiseAbs().sum(); }

double von_neumann_entropy(const ComplexMatrix& rho) {
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw MatrixPropertyError("von_neumann_entropy: trace " + std::to_string(tr) + " is not 1");
  }
  const RealVector lambda = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double l = lambda(i);
    if (l < -1e-9) {
      throw MatrixPropertyError("von_neumann_entropy: negative eigenvalue " + std::to_string(l));
    }
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p must lie in [0, 1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace twirlent
