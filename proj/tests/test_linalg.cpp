// Dense matrix helpers: Jacobi eigensolver against known spectra and
// reconstruction residuals, Gauss-Jordan inversion, and metric Gram-Schmidt.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "curvcones/errors.hpp"
#include "curvcones/linalg.hpp"

using namespace curvcones;
using linalg::Matrix;

namespace {

Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = entry(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Matrix random_spd(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  Matrix g = a.transposed() * a;
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 0.5;  // keep well-posed
  return g;
}

}  // namespace

TEST_CASE("jacobi reproduces a hand-diagonalizable 2x2") {
  // [[2,1],[1,2]] has eigenvalues 1 and 3.
  Matrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  const linalg::EigenDecomposition d = jacobi_eigen(m);
  REQUIRE(d.values.size() == 2);
  CHECK(d.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.values[1] == doctest::Approx(3.0).epsilon(1e-14));
  // Eigenvector for 1 is (1,-1)/sqrt(2) up to sign.
  CHECK(std::fabs(d.vectors(0, 0)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(d.vectors(0, 0) * d.vectors(1, 0) < 0);
}

TEST_CASE("jacobi eigenvalues are ascending and reconstruct the matrix") {
  std::mt19937_64 rng(20250u);
  for (std::size_t n : {1u, 2u, 3u, 6u, 10u, 15u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix m = random_symmetric(n, rng);
      const linalg::EigenDecomposition d = jacobi_eigen(m);
      REQUIRE(d.values.size() == n);
      for (std::size_t i = 1; i < n; ++i) CHECK(d.values[i - 1] <= d.values[i]);
      // V D V^T == M entrywise, and V^T V == I.
      double recon = 0.0, ortho = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double mij = 0.0, vij = 0.0;
          for (std::size_t a = 0; a < n; ++a) {
            mij += d.vectors(i, a) * d.values[a] * d.vectors(j, a);
            vij += d.vectors(a, i) * d.vectors(a, j);
          }
          recon = std::max(recon, std::fabs(mij - m(i, j)));
          ortho = std::max(ortho, std::fabs(vij - (i == j ? 1.0 : 0.0)));
        }
      CHECK(recon <= 1e-10);
      CHECK(ortho <= 1e-12);
    }
  }
}

TEST_CASE("jacobi keeps the trace and rejects bad input") {
  std::mt19937_64 rng(88u);
  const Matrix m = random_symmetric(8, rng);
  const linalg::EigenDecomposition d = jacobi_eigen(m);
  double trace = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    trace += m(i, i);
    sum += d.values[i];
  }
  CHECK(sum == doctest::Approx(trace).epsilon(1e-13));

  Matrix bad(2, 3);
  CHECK_THROWS_AS(jacobi_eigen(bad), ArgumentError);
  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  asym(1, 0) = -1.0;
  CHECK_THROWS_AS(jacobi_eigen(asym), ArgumentError);
}

TEST_CASE("inverse round-trips against the identity") {
  std::mt19937_64 rng(4242u);
  for (std::size_t n : {1u, 2u, 4u, 7u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix g = random_spd(n, rng);
      const Matrix gi = inverse(g);
      const Matrix prod = g * gi;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(prod(i, j) ==
                doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    }
  }
  Matrix singular(2, 2);
  singular(0, 0) = 1.0;
  singular(0, 1) = 2.0;
  singular(1, 0) = 2.0;
  singular(1, 1) = 4.0;
  CHECK_THROWS_AS(inverse(singular), NumericalError);
}

TEST_CASE("metric orthonormal frame is g-orthonormal") {
  std::mt19937_64 rng(99u);
  for (std::size_t n : {2u, 3u, 5u}) {
    for (int rep = 0; rep < 30; ++rep) {
      const Matrix g = random_spd(n, rng);
      const Matrix b = metric_orthonormal_frame(g);
      // B G B^T == I to tight tolerance: rows are the frame vectors.
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              dot += b(r, i) * g(i, j) * b(s, j);
          CHECK(dot == doctest::Approx(r == s ? 1.0 : 0.0).epsilon(1e-12));
        }
      // Gram-Schmidt in coordinate order is lower triangular.
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
          CHECK(b(r, s) == doctest::Approx(0.0).epsilon(1e-14));
    }
  }
  // The identity metric yields the identity frame.
  const Matrix e = metric_orthonormal_frame(Matrix::identity(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(e(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));

  Matrix indefinite(2, 2);
  indefinite(0, 0) = 1.0;
  indefinite(1, 1) = -1.0;
  CHECK_THROWS_AS(metric_orthonormal_frame(indefinite), NumericalError);
}

TEST_CASE("matrix helpers behave") {
  Matrix m(2, 3);
  m(0, 0) = 3.0;
  m(1, 2) = -4.0;
  CHECK(m.frobenius_norm() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(m.max_abs() == doctest::Approx(4.0));
  const Matrix t = m.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t(2, 1) == doctest::Approx(-4.0));
  CHECK_THROWS_AS(Matrix(2, 2) * Matrix(3, 3), ArgumentError);
}
