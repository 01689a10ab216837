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

#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "../test_util.hpp"
#include "twirlent/linalg.hpp"

using namespace twirlent;
using twirlent::testing::basis;
using twirlent::testing::projector;
using twirlent::testing::random_density;
using twirlent::testing::random_hermitian;

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

ComplexVector phi_plus_2x2() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = M_SQRT1_2;
  v(3) = M_SQRT1_2;
  return v;
}

}  // namespace

TEST_CASE("tensor_product follows the i*dB + j convention") {
  CHECK(max_abs_diff(tensor_product(ComplexMatrix(ComplexMatrix::Identity(2, 2)), ComplexMatrix(ComplexMatrix::Identity(3, 3))),
                     ComplexMatrix::Identity(6, 6)) == 0.0);

  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const ComplexMatrix zi = tensor_product(z, ComplexMatrix(ComplexMatrix::Identity(2, 2)));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(max_abs_diff(zi, expected) == 0.0);

  // (σx⊗σx)|00⟩ = |11⟩
  const ComplexVector out = tensor_product(pauli_x(), pauli_x()) * basis(4, 0);
  CHECK(max_abs_diff(out, basis(4, 3)) == 0.0);

  const ComplexVector ab = tensor_product(ComplexVector(basis(2, 1)), ComplexVector(basis(3, 2)));
  CHECK(std::abs(ab(1 * 3 + 2) - Complex(1.0)) == 0.0);
}

TEST_CASE("partial_transpose") {
  std::mt19937_64 rng(11);

  SUBCASE("product state maps to sigma_A (x) sigma_B^T") {
    const ComplexMatrix a2 = random_density({2, 1}, rng).matrix();
    const auto b = random_density({3, 1}, rng).matrix();
    const ComplexMatrix prod = tensor_product(a2, b);
    const ComplexMatrix pt = partial_transpose(prod, {2, 3});
    CHECK(max_abs_diff(pt, tensor_product(a2, ComplexMatrix(b.transpose()))) < 1e-15);
    const RealVector before = hermitian_eigenvalues(prod);
    const RealVector after = hermitian_eigenvalues(pt);
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("Bell state spectrum is {1/2, 1/2, 1/2, -1/2}") {
    const RealVector ev = hermitian_eigenvalues(partial_transpose(projector(phi_plus_2x2()), {2, 2}));
    CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("entry rule <ij|pt|i'j'> = <ij'|rho|i'j>") {
    const auto rho = random_density({2, 3}, rng).matrix();
    const ComplexMatrix pt = partial_transpose(rho, {2, 3});
    CHECK(pt(0 * 3 + 1, 1 * 3 + 2) == rho(0 * 3 + 2, 1 * 3 + 1));
  }

  SUBCASE("involution, trace and Hermiticity on random Hermitian inputs") {
    for (const BipartiteDims dims : {BipartiteDims{2, 3}, BipartiteDims{2, 4}}) {
      for (int k = 0; k < 50; ++k) {
        const ComplexMatrix h = random_hermitian(static_cast<Eigen::Index>(dims.total()), rng);
        const ComplexMatrix pt = partial_transpose(h, dims);
        CHECK(max_abs_diff(partial_transpose(pt, dims), h) == 0.0);
        CHECK(std::abs(pt.trace() - h.trace()) < 1e-12);
        CHECK(is_hermitian(pt));
      }
    }
  }

  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::Identity(5, 5), {2, 3}), DimensionError);
}

TEST_CASE("partial_trace_B") {
  std::mt19937_64 rng(12);
  const auto a = random_density({2, 1}, rng).matrix();
  const auto b = random_density({3, 1}, rng).matrix();
  CHECK(max_abs_diff(partial_trace_B(tensor_product(a, b), {2, 3}), a) < 1e-15);

  ComplexVector singlet = ComplexVector::Zero(4);
  singlet(1) = M_SQRT1_2;
  singlet(2) = -M_SQRT1_2;
  CHECK(max_abs_diff(partial_trace_B(projector(singlet), {2, 2}), 0.5 * ComplexMatrix::Identity(2, 2)) <
        1e-15);

  CHECK(max_abs_diff(partial_trace_B(projector(basis(4, 0)), {2, 2}), projector(basis(2, 0))) == 0.0);

  const auto rho = random_density({2, 4}, rng).matrix();
  CHECK(std::abs(partial_trace_B(rho, {2, 4}).trace() - rho.trace()) < 1e-14);
  CHECK_THROWS_AS(partial_trace_B(rho, {3, 3}), DimensionError);
}

TEST_CASE("hermitian_eig") {
  SUBCASE("diagonal input") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << 3.0, 1.0, 2.0;
    const auto e = hermitian_eig(d);
    CHECK(e.eigenvalues(0) == 1.0);
    CHECK(e.eigenvalues(1) == 2.0);
    CHECK(e.eigenvalues(2) == 3.0);
  }

  SUBCASE("Pauli x") {
    const auto e = hermitian_eig(pauli_x());
    CHECK(e.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("random Hermitian matrices up to dim 16 match the reference solver") {
    std::mt19937_64 rng(13);
    for (int d = 1; d <= 16; ++d) {
      for (int rep = 0; rep < 3; ++rep) {
        const ComplexMatrix h = random_hermitian(d, rng);
        const auto e = hermitian_eig(h);
        CHECK(max_abs_diff(e.reconstruct(), h) <= 1e-10);
        CHECK(max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors, ComplexMatrix::Identity(d, d)) <=
              1e-10);
        for (Eigen::Index i = 1; i < d; ++i) CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));

        Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h);
        CHECK((ref.eigenvalues() - e.eigenvalues).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((hermitian_eigenvalues(h) - e.eigenvalues).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }

  SUBCASE("zero and degenerate matrices") {
    const auto z = hermitian_eig(ComplexMatrix::Zero(4, 4));
    CHECK(z.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
    const auto i = hermitian_eig(ComplexMatrix::Identity(5, 5) * 0.2);
    CHECK((i.eigenvalues.array() - 0.2).abs().maxCoeff() < 1e-16);
  }

  SUBCASE("non-Hermitian input is rejected") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(a), MatrixPropertyError);
  }
}

TEST_CASE("trace_norm") {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 20; ++k) {
    CHECK(trace_norm(random_density({2, 3}, rng).matrix()) == doctest::Approx(1.0).epsilon(1e-10));
  }
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d.diagonal() << 0.5, -0.5;
  CHECK(trace_norm(d) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace_norm(partial_transpose(projector(phi_plus_2x2()), {2, 2})) ==
        doctest::Approx(2.0).epsilon(1e-12));
  ComplexMatrix nh = ComplexMatrix::Zero(2, 2);
  nh(1, 0) = 1.0;
  CHECK_THROWS_AS(trace_norm(nh), MatrixPropertyError);
}

TEST_CASE("von_neumann_entropy") {
  CHECK(von_neumann_entropy(projector(phi_plus_2x2())) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(von_neumann_entropy(projector(phi_plus_2x2()))) < 1e-12);
  CHECK(von_neumann_entropy(0.5 * ComplexMatrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(von_neumann_entropy(0.25 * ComplexMatrix::Identity(4, 4)) == doctest::Approx(2.0).epsilon(1e-15));

  SUBCASE("additive on product states") {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 10; ++k) {
      const auto a = random_density({2, 1}, rng).matrix();
      const auto b = random_density({3, 1}, rng).matrix();
      CHECK(std::abs(von_neumann_entropy(tensor_product(a, b)) -
                     (von_neumann_entropy(a) + von_neumann_entropy(b))) <= 1e-9);
    }
  }

  SUBCASE("errors") {
    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad.diagonal() << 1.1, -0.1;
    CHECK_THROWS_AS(von_neumann_entropy(bad), MatrixPropertyError);
    CHECK_THROWS_AS(von_neumann_entropy(ComplexMatrix::Identity(2, 2)), MatrixPropertyError);
  }
}

TEST_CASE("binary_entropy") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  // 40-digit reference value: h(0.95826) = 0.25021392361460201376...
  CHECK(binary_entropy(0.95826) == doctest::Approx(0.2502139236146020).epsilon(1e-14));
  for (double p = 0.0; p <= 1.0; p += 0.01) CHECK(std::abs(binary_entropy(p) - binary_entropy(1.0 - p)) <= 1e-14);
  CHECK_THROWS(binary_entropy(-0.01));
  CHECK_THROWS(binary_entropy(1.5));
}
