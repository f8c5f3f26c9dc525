// Riemann tensors and the curvature operator: symmetry validation, the
// assembled matrix against hand-computed entries, derived curvatures, and
// kernel projections, with the complex projective plane as the frozen anchor.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "curvcones/errors.hpp"
#include "curvcones/models.hpp"
#include "curvcones/riemcurv.hpp"

using namespace curvcones;

TEST_CASE("constant curvature assembles to sec times the identity") {
  for (std::size_t n : {2u, 3u, 5u}) {
    const RiemannTensor r = RiemannTensor::constant_curvature(n, 0.7);
    const CurvatureOperatorMatrix op = assemble_operator(r);
    CHECK(op.n == n);
    CHECK(op.N == n * (n - 1) / 2);
    for (std::size_t a = 0; a < op.N; ++a)
      for (std::size_t b = 0; b < op.N; ++b)
        CHECK(op.entries(a, b) ==
              doctest::Approx(a == b ? 0.7 : 0.0).epsilon(1e-15));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          CHECK(sectional(r, i, j) == doctest::Approx(0.7).epsilon(1e-15));
    // Ric = (n-1) sec I and R = n(n-1) sec.
    const linalg::Matrix ric = ricci(r);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(ric(i, i) == doctest::Approx(0.7 * (n - 1)).epsilon(1e-13));
    CHECK(scalar(r) == doctest::Approx(0.7 * n * (n - 1)).epsilon(1e-13));
  }
  CHECK(scalar(RiemannTensor::zero(4)) == 0.0);
}

TEST_CASE("pair index enumerates planes lexicographically") {
  const CurvatureOperatorMatrix op =
      assemble_operator(RiemannTensor::zero(4));
  // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  CHECK(op.pair_index(0, 1) == 0);
  CHECK(op.pair_index(0, 2) == 1);
  CHECK(op.pair_index(0, 3) == 2);
  CHECK(op.pair_index(1, 2) == 3);
  CHECK(op.pair_index(1, 3) == 4);
  CHECK(op.pair_index(2, 3) == 5);
  for (std::size_t a = 0; a < 6; ++a) {
    const auto [i, j] = op.plane(a);
    CHECK(i < j);
    CHECK(op.pair_index(i, j) == a);
  }
}

TEST_CASE("projective plane tensor hits the stored operator and spectrum") {
  const RiemannTensor r = cp2_tensor();
  const CurvatureOperatorMatrix op = assemble_operator(r);
  const linalg::Matrix& stored = cp2_operator();
  REQUIRE(op.N == 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      CHECK(op.entries(a, b) == doctest::Approx(stored(a, b)).epsilon(1e-15));

  const SpectrumDecomposition dec = eigen_spectrum(op);
  const double expected[6] = {0, 0, 1, 1, 1, 3};
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(dec.spectrum[i] == doctest::Approx(expected[i]).epsilon(1e-12));

  // Einstein with constant 3: Ric = 3I, R = 12 = 2 * (0+0+1+1+1+3).
  const linalg::Matrix ric = ricci(r);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(ric(i, j) == doctest::Approx(i == j ? 3.0 : 0.0).epsilon(1e-13));
  CHECK(scalar(r) == doctest::Approx(12.0).epsilon(1e-13));

  // Holomorphic planes have sectional 2, totally real planes 1/2.
  CHECK(sectional(r, 0, 1) == doctest::Approx(2.0));
  CHECK(sectional(r, 2, 3) == doctest::Approx(2.0));
  CHECK(sectional(r, 0, 2) == doctest::Approx(0.5));
  CHECK(sectional(r, 1, 3) == doctest::Approx(0.5));
}

TEST_CASE("scalar equals twice the operator trace on random valid tensors") {
  // Valid tensors form a linear space: combine the anchors randomly.
  std::mt19937_64 rng(654u);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const RiemannTensor base1 = cp2_tensor();
  const RiemannTensor base2 = RiemannTensor::constant_curvature(4, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const double c1 = coef(rng), c2 = coef(rng);
    std::vector<double> comps(base1.components().size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      comps[i] = c1 * base1.components()[i] + c2 * base2.components()[i];
    const RiemannTensor r(4, std::move(comps));
    const CurvatureOperatorMatrix op = assemble_operator(r);
    double trace = 0.0;
    for (std::size_t a = 0; a < op.N; ++a) trace += op.entries(a, a);
    CHECK(scalar(r) ==
          doctest::Approx(2.0 * trace).epsilon(1e-12).scale(
              std::max(1.0, std::fabs(scalar(r)))));
    // The operator matrix is symmetric by construction.
    for (std::size_t a = 0; a < op.N; ++a)
      for (std::size_t b = a + 1; b < op.N; ++b)
        CHECK(op.entries(a, b) == doctest::Approx(op.entries(b, a)));
  }
}

TEST_CASE("symmetry violations are rejected with the offender named") {
  const std::size_t n = 3;
  // Break antisymmetry in the first pair.
  {
    std::vector<double> c(n * n * n * n, 0.0);
    c[((0 * n + 1) * n + 0) * n + 1] = 1.0;  // R(0,1,0,1) without partners
    CHECK_THROWS_AS(RiemannTensor(n, std::move(c)), ValidationError);
  }
  // Valid up to pair symmetry, broken across pairs.
  {
    const RiemannTensor good = RiemannTensor::constant_curvature(n, 1.0);
    std::vector<double> c = good.components();
    c[((0 * n + 1) * n + 0) * n + 2] += 0.5;  // R(0,1,0,2) one-sided bump
    CHECK_THROWS_AS(RiemannTensor(n, std::move(c)), ValidationError);
  }
  // First Bianchi violation with both pair symmetries intact: in n = 4,
  // set R(0,1,2,3) = R(2,3,0,1) = 1 with the cyclic partners zero.
  {
    const std::size_t m = 4;
    std::vector<double> c(m * m * m * m, 0.0);
    const auto put = [&](std::size_t i, std::size_t j, std::size_t k,
                         std::size_t l, double v) {
      c[((i * m + j) * m + k) * m + l] = v;
      c[((j * m + i) * m + k) * m + l] = -v;
      c[((i * m + j) * m + l) * m + k] = -v;
      c[((j * m + i) * m + l) * m + k] = v;
      c[((k * m + l) * m + i) * m + j] = v;
      c[((l * m + k) * m + i) * m + j] = -v;
      c[((k * m + l) * m + j) * m + i] = -v;
      c[((l * m + k) * m + j) * m + i] = v;
    };
    put(0, 1, 2, 3, 1.0);
    CHECK_THROWS_AS(RiemannTensor(m, std::move(c)), ValidationError);
  }
  // Wrong component count.
  CHECK_THROWS_AS(RiemannTensor(3, std::vector<double>(10, 0.0)),
                  ArgumentError);
  // Residuals of a good tensor are zero.
  const RiemannTensor::Residuals res = cp2_tensor().residuals();
  CHECK(res.antisymmetry == 0.0);
  CHECK(res.pair_symmetry == 0.0);
  CHECK(res.bianchi == 0.0);
  CHECK(res.max_component == doctest::Approx(2.0));
}

TEST_CASE("kernel projections of the projective plane operator") {
  const CurvatureOperatorMatrix op = assemble_operator(cp2_tensor());
  const std::vector<double> coeffs = kernel_coefficients(op, 2);
  REQUIRE(coeffs.size() == 6);
  // The two null directions live in the (0,2)/(1,3) and (0,3)/(1,2)
  // plane pairs; each of those planes projects with weight 1/2.
  const double expected[6] = {0.0, 0.5, 0.5, 0.5, 0.5, 0.0};
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(coeffs[a] == doctest::Approx(expected[a]).epsilon(1e-10));
  // Asking for a kernel the spectrum does not have is inconsistent.
  CHECK_THROWS_AS(kernel_coefficients(op, 3), ConsistencyError);
  // Identity operator: no kernel at all.
  CHECK_THROWS_AS(
      kernel_coefficients(
          assemble_operator(RiemannTensor::constant_curvature(3, 1.0)), 1),
      ConsistencyError);
}

TEST_CASE("eigen decomposition satisfies the residual contract") {
  const CurvatureOperatorMatrix op = assemble_operator(cp2_tensor());
  const SpectrumDecomposition dec = eigen_spectrum(op);
  // |Mv - lambda v| small for every pair.
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t i = 0; i < 6; ++i) {
      double mv = 0.0;
      for (std::size_t a = 0; a < 6; ++a)
        mv += op.entries(i, a) * dec.vectors(a, j);
      CHECK(std::fabs(mv - dec.spectrum[j] * dec.vectors(i, j)) <= 1e-10);
    }
  }
}
