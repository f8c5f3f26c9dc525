// The closed-form model catalog: constant-curvature factors, products with
// vanishing mixed components, the projective-space entries, and the id
// parser that backs the command line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "curvcones/errors.hpp"
#include "curvcones/models.hpp"

using namespace curvcones;

namespace {

Spectrum riem_spectrum(const ModelSpec& spec) {
  const ModelBuild mb = build(spec);
  REQUIRE(mb.riemann.has_value());
  return eigen_spectrum(assemble_operator(*mb.riemann)).spectrum;
}

}  // namespace

TEST_CASE("round spheres give identity operators scaled by curvature") {
  for (std::size_t n : {2u, 3u, 5u}) {
    const Spectrum s = riem_spectrum(ModelSpec::round_sphere(n));
    REQUIRE(s.size() == n * (n - 1) / 2);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(s[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Radius r scales sectional curvature by 1/r^2.
  const Spectrum scaled = riem_spectrum(ModelSpec::round_sphere(3, 2.0));
  for (std::size_t i = 0; i < scaled.size(); ++i)
    CHECK(scaled[i] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(ModelSpec::round_sphere(0), DomainError);
  CHECK_THROWS_AS(ModelSpec::round_sphere(2, 0.0), ArgumentError);
  CHECK_THROWS_AS(ModelSpec::round_sphere(2, -1.0), ArgumentError);
}

TEST_CASE("flat and hyperbolic factors") {
  const Spectrum flat = riem_spectrum(ModelSpec::flat(4));
  for (std::size_t i = 0; i < flat.size(); ++i) CHECK(flat[i] == 0.0);
  const Spectrum hyp = riem_spectrum(ModelSpec::hyperbolic(3));
  for (std::size_t i = 0; i < hyp.size(); ++i)
    CHECK(hyp[i] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(ModelSpec::flat(0), DomainError);
  CHECK_THROWS_AS(ModelSpec::hyperbolic(1), DomainError);
}

TEST_CASE("sphere-times-line products have the degenerate spectrum") {
  // S^k x R: k zero eigenvalues (mixed planes), k(k-1)/2 ones.
  for (std::size_t k : {2u, 3u, 4u, 6u}) {
    const Spectrum s = riem_spectrum(
        ModelSpec::product(ModelSpec::round_sphere(k), ModelSpec::flat(1)));
    const std::size_t n = k + 1;
    REQUIRE(s.size() == n * (n - 1) / 2);
    for (std::size_t i = 0; i < k; ++i)
      CHECK(std::fabs(s[i]) <= 1e-13);
    for (std::size_t i = k; i < s.size(); ++i)
      CHECK(s[i] == doctest::Approx(1.0).epsilon(1e-12));
    // The positive count saturates the product budget.
    CHECK(positive_eigenvalue_budget(n, k, Geometry::Riemannian) ==
          static_cast<long>(s.size() - k));
  }
}

TEST_CASE("positive eigenvalue budgets") {
  // Riemannian: n(n-1)/2 - m(n-m).
  CHECK(positive_eigenvalue_budget(3, 2, Geometry::Riemannian) == 1);
  CHECK(positive_eigenvalue_budget(4, 2, Geometry::Riemannian) == 2);
  CHECK(positive_eigenvalue_budget(5, 1, Geometry::Riemannian) == 6);
  // Kahler: n^2 - 2m(n-m).
  CHECK(positive_eigenvalue_budget(2, 1, Geometry::Kahler) == 2);
  CHECK(positive_eigenvalue_budget(3, 1, Geometry::Kahler) == 5);
  CHECK_THROWS_AS(positive_eigenvalue_budget(4, 0, Geometry::Riemannian),
                  RangeError);
  CHECK_THROWS_AS(positive_eigenvalue_budget(4, 4, Geometry::Riemannian),
                  RangeError);
}

TEST_CASE("projective entries carry Kahler tensors") {
  const ModelSpec cpn = ModelSpec::fubini_study(3);
  CHECK(cpn.kahler());
  const ModelBuild mb = build(cpn);
  REQUIRE(mb.kahler.has_value());
  CHECK_FALSE(mb.riemann.has_value());
  const Spectrum s =
      kahler_eigen_spectrum(assemble_kahler_operator(*mb.kahler)).spectrum;
  REQUIRE(s.size() == 9);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(s[i] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s[8] == doctest::Approx(4.0).epsilon(1e-12));

  // The complex projective plane also carries its stored real tensor.
  const ModelBuild plane = build(ModelSpec::fubini_study(2));
  REQUIRE(plane.riemann.has_value());
  REQUIRE(plane.kahler.has_value());
  const RiemannTensor stored = cp2_tensor();
  const std::vector<double>& a = plane.riemann->components();
  const std::vector<double>& b = stored.components();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  // Product of two lines: Kahler spectrum (0, 0, 2, 2).
  const ModelSpec lines =
      ModelSpec::product(ModelSpec::fubini_study(1), ModelSpec::fubini_study(1));
  CHECK(lines.kahler());
  CHECK(lines.dimension() == 2);
  const ModelBuild lb = build(lines);
  REQUIRE(lb.kahler.has_value());
  const Spectrum ls =
      kahler_eigen_spectrum(assemble_kahler_operator(*lb.kahler)).spectrum;
  const double expected[4] = {0.0, 0.0, 2.0, 2.0};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(ls[i] == doctest::Approx(expected[i]).epsilon(1e-13));
}

TEST_CASE("mixed Riemannian-Kahler products cannot be assembled") {
  CHECK_THROWS_WITH_AS(
      ModelSpec::product(ModelSpec::fubini_study(1), ModelSpec::flat(1)),
      "product: cannot mix Kahler and Riemannian factors in one entry",
      ArgumentError);
}

TEST_CASE("model id parsing") {
  CHECK(parse_model_id("s3").describe() == "round sphere S^3");
  CHECK(parse_model_id("s3").dimension() == 3);
  CHECK(parse_model_id("s2xs1").describe() ==
        "round sphere S^2 x flat factor of dimension 1");
  CHECK(parse_model_id("s2xs1").dimension() == 3);
  CHECK(parse_model_id("sKxs1:5").dimension() == 6);
  CHECK(parse_model_id("flat:4").describe() == "flat factor of dimension 4");
  CHECK(parse_model_id("cpn:2").describe() == "Fubini-Study CP^2");
  CHECK(parse_model_id("cpn:2").kahler());
  CHECK(parse_model_id("cp1xcp1").describe() ==
        "Fubini-Study CP^1 x Fubini-Study CP^1");
  CHECK(parse_model_id("hyperbolic:4").describe() == "hyperbolic space H^4");

  CHECK_THROWS_WITH_AS(parse_model_id("nope"), "unknown model id 'nope'",
                       DomainError);
  CHECK_THROWS_AS(parse_model_id("s4"), DomainError);  // only s3 is bare
  CHECK_THROWS_AS(parse_model_id("sKxs1:1"), DomainError);
  CHECK_THROWS_AS(parse_model_id("sKxs1:"), DomainError);
  CHECK_THROWS_AS(parse_model_id("sKxs1:abc"), DomainError);
  CHECK_THROWS_AS(parse_model_id("flat:1"), DomainError);
  CHECK_THROWS_AS(parse_model_id("cpn:0"), DomainError);
  CHECK_THROWS_AS(parse_model_id("flat:99999"), DomainError);
  CHECK_THROWS_AS(parse_model_id("hyperbolic:1"), DomainError);
}

TEST_CASE("describe marks non-unit radii") {
  CHECK(ModelSpec::round_sphere(2, 2.0).describe() ==
        "round sphere S^2 (radius != 1)");
}
