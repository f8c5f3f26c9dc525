// Evidence aggregation and the classification ladders: every conclusion
// branch in both geometries, the Betti-vanishing table, and the verdict
// serialization contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvcones/classify.hpp"
#include "curvcones/errors.hpp"
#include "curvcones/symcone.hpp"

using namespace curvcones;

namespace {

std::vector<Spectrum> one(const Spectrum& s) { return {s}; }

Evidence riem(std::size_t dim, const std::vector<Spectrum>& spectra,
              std::size_t k = 2, bool compact = true) {
  return Evidence::gather(Geometry::Riemannian, dim, spectra, k, 1e-9,
                          compact);
}

Evidence kahler(std::size_t dim, const std::vector<Spectrum>& spectra,
                std::size_t k = 2, bool compact = true) {
  return Evidence::gather(Geometry::Kahler, dim, spectra, k, 1e-9, compact);
}

}  // namespace

TEST_CASE("gather computes shifts and verdicts consistently") {
  const Spectrum sphere{{1.0, 1.0, 1.0, 1.0, 1.0, 1.0}};
  const Evidence e = riem(4, one(sphere), 2);
  CHECK(e.kind() == Geometry::Riemannian);
  CHECK(e.dim() == 4);
  CHECK(e.k() == 2);
  CHECK(e.tolerance() == 1e-9);
  CHECK(e.compactness_asserted());
  REQUIRE(e.spectra().size() == 1);
  REQUIRE(e.shifted().size() == 1);
  REQUIRE(e.verdicts().size() == 1);

  const double alpha = shift_threshold(6, 2, ShiftKind::Riemannian).alpha;
  CHECK(e.alpha() == doctest::Approx(alpha).epsilon(1e-15));
  const double total = sphere.total();
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(e.shifted()[0][i] ==
          doctest::Approx(sphere[i] - alpha * total).epsilon(1e-14));

  // Stored verdicts agree with recomputation from the shifted spectra.
  const ConeVerdict redo = cone_membership(e.shifted()[0], 2, e.tolerance());
  CHECK(e.verdicts()[0].status == redo.status);
  CHECK(e.verdicts()[0].sigmas == redo.sigmas);

  // Kahler evidence shifts with the square-dimension threshold.
  const Evidence ek = kahler(2, one(Spectrum{{1.0, 1.0, 1.0, 3.0}}), 2);
  CHECK(ek.alpha() ==
        doctest::Approx(shift_threshold(2, 2, ShiftKind::Kahler).alpha)
            .epsilon(1e-15));
}

TEST_CASE("gather rejects malformed evidence") {
  const Spectrum s3{{1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(
      Evidence::gather(Geometry::Riemannian, 3, one(s3), 2, 0.0, true),
      ArgumentError);
  CHECK_THROWS_AS(
      Evidence::gather(Geometry::Riemannian, 3, {}, 2, 1e-9, true),
      ArgumentError);
  CHECK_THROWS_AS(
      Evidence::gather(Geometry::Riemannian, 2, one(Spectrum{{1.0}}), 1,
                       1e-9, true),
      ArgumentError);  // N = 1: too small for cone evidence
  CHECK_THROWS_AS(
      Evidence::gather(Geometry::Riemannian, 3,
                       {s3, Spectrum{{1.0, 1.0, 1.0, 1.0}}}, 2, 1e-9, true),
      ArgumentError);  // mixed sizes
  CHECK_THROWS_AS(
      Evidence::gather(Geometry::Riemannian, 3, one(s3), 0, 1e-9, true),
      RangeError);
  CHECK_THROWS_AS(
      Evidence::gather(Geometry::Riemannian, 3, one(s3), 3, 1e-9, true),
      RangeError);  // k > N-1 = 2
}

TEST_CASE("interior evidence at k = 2 gives the rigidity conclusion") {
  const Verdict v = classify_riemannian(riem(3, one(Spectrum{{1., 1., 1.}})));
  CHECK(v.conclusion == Conclusion::SphericalSpaceForm);
  CHECK(v.theorem == "shifted-cone-sphere-rigidity");
  CHECK(v.k == 2);
  CHECK(v.points_checked == 1);
  REQUIRE(v.caveats.size() == 2);
  CHECK(v.caveats[0].find("sampling-only") != std::string::npos);
  CHECK(v.caveats[1].find("compactness") != std::string::npos);
  CHECK(v.betti_vanishing.empty());
}

TEST_CASE("boundary trichotomy branches on the degenerate profile") {
  // All-zero spectra: the flat branch.
  const Verdict flat =
      classify_riemannian(riem(3, one(Spectrum{{0., 0., 0.}})));
  CHECK(flat.conclusion == Conclusion::Flat);
  CHECK(flat.theorem == "shifted-cone-boundary-trichotomy");

  // Dimension 3 with the (0, 0, c) profile: the product branch.
  const Verdict prod =
      classify_riemannian(riem(3, one(Spectrum{{0., 0., 1.}})));
  CHECK(prod.conclusion == Conclusion::S2xS1OrRP2xS1);
  CHECK(prod.theorem == "shifted-cone-boundary-trichotomy");

  // Closure in higher dimension without the profile: still a space form.
  const Verdict mixed = classify_riemannian(
      riem(4, {Spectrum{{1., 1., 1., 1., 1., 1.}},
               Spectrum{{0., 0., 1., 1., 1., 1.}}}));
  CHECK(mixed.conclusion == Conclusion::SphericalSpaceForm);
  CHECK(mixed.theorem == "shifted-cone-boundary-trichotomy");
  CHECK(mixed.points_checked == 2);

  // Any outside point forfeits every conclusion.
  const Verdict out = classify_riemannian(
      riem(4, one(Spectrum{{0., 0., 1., 1., 1., 3.}})));
  CHECK(out.conclusion == Conclusion::NoConclusion);
  CHECK(out.theorem == "none");
}

TEST_CASE("k-positive interior evidence lists vanishing Betti numbers") {
  const Spectrum sphere6{{1., 1., 1., 1., 1., 1.}};
  const Verdict v = classify_riemannian(riem(4, one(sphere6), 1));
  CHECK(v.conclusion == Conclusion::KPositive);
  CHECK(v.theorem == "k-positivity-betti-vanishing");
  CHECK(v.betti_vanishing == std::vector<std::size_t>{1, 2, 3});
  CHECK(v.caveats.size() == 2);

  // k beyond n-1: the statement does not apply and says so.
  const Verdict high = classify_riemannian(riem(4, one(sphere6), 4));
  CHECK(high.conclusion == Conclusion::KPositive);
  CHECK(high.betti_vanishing.empty());
  REQUIRE(high.caveats.size() == 3);
  CHECK(high.caveats[2] == "k exceeds n-1; the Betti statement does not apply");

  // Non-interior evidence at k != 2 concludes nothing.
  const Verdict none = classify_riemannian(
      riem(3, one(Spectrum{{0., 0., 1.}}), 1));
  CHECK(none.conclusion == Conclusion::NoConclusion);
}

TEST_CASE("betti vanishing table") {
  CHECK(betti_vanishing(6, 3).indices ==
        std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(betti_vanishing(6, 3).caveat.empty());
  CHECK(betti_vanishing(5, 4).indices == std::vector<std::size_t>{1, 4});
  CHECK(betti_vanishing(5, 3).indices ==
        std::vector<std::size_t>{1, 2, 3, 4});  // k = ceil(5/2): full band
  CHECK(betti_vanishing(8, 6).indices ==
        std::vector<std::size_t>{1, 2, 6, 7});
  CHECK(betti_vanishing(2, 1).indices == std::vector<std::size_t>{1});
  CHECK(betti_vanishing(5, 5).indices.empty());
  CHECK(betti_vanishing(5, 5).caveat ==
        "k exceeds n-1; the Betti statement does not apply");
  CHECK_FALSE(betti_vanishing(1, 1).caveat.empty());
  CHECK_FALSE(betti_vanishing(4, 0).caveat.empty());
}

TEST_CASE("kahler ladder") {
  // Interior: the projective rigidity branch.
  const Verdict cpn =
      classify_kahler(kahler(2, one(Spectrum{{1., 1., 1., 3.}})));
  CHECK(cpn.conclusion == Conclusion::BiholomorphicCPn);
  CHECK(cpn.theorem == "shifted-cone-projective-rigidity");

  // Boundary with the (0, 0, c, c) profile in complex dimension 2.
  const Verdict lines =
      classify_kahler(kahler(2, one(Spectrum{{0., 0., 2., 2.}})));
  CHECK(lines.conclusion == Conclusion::CP1xCP1);
  CHECK(lines.theorem == "kahler-boundary-trichotomy");

  // All-zero spectra: the torus branch.
  const Verdict torus =
      classify_kahler(kahler(2, one(Spectrum{{0., 0., 0., 0.}})));
  CHECK(torus.conclusion == Conclusion::FlatTorus);

  // Boundary in complex dimension 3 without the profile: projective space.
  // (The two-zero profile only triggers the product branch when the complex
  // dimension is 2, so here it lands in the default rigidity branch.)
  const Verdict cp3 = classify_kahler(
      kahler(3, one(Spectrum{{0., 0., 1., 1., 1., 1., 1., 1., 1.}})));
  CHECK(cp3.conclusion == Conclusion::BiholomorphicCPn);
  CHECK(cp3.theorem == "kahler-boundary-trichotomy");

  // Outside evidence: nothing.
  const Verdict out =
      classify_kahler(kahler(2, one(Spectrum{{0., 0., 1., 3.}})));
  CHECK(out.conclusion == Conclusion::NoConclusion);

  // k != 2 carries no stated Kahler conclusion, with a caveat.
  const Verdict k1 =
      classify_kahler(kahler(2, one(Spectrum{{1., 1., 1., 3.}}), 1));
  CHECK(k1.conclusion == Conclusion::NoConclusion);
  REQUIRE(k1.caveats.size() == 3);
  CHECK(k1.caveats[2] ==
        "only the k = 2 shifted cone carries stated Kahler conclusions");
}

TEST_CASE("classification preconditions") {
  const Spectrum s3{{1., 1., 1.}};
  // Wrong geometry kind for the ladder.
  CHECK_THROWS_AS(
      classify_riemannian(kahler(2, one(Spectrum{{1., 1., 1., 3.}}))),
      ArgumentError);
  CHECK_THROWS_AS(classify_kahler(riem(3, one(s3))), ArgumentError);
  // Compactness must be asserted.
  CHECK_THROWS_AS(classify_riemannian(riem(3, one(s3), 2, false)),
                  PreconditionError);
  CHECK_THROWS_AS(
      classify_kahler(kahler(2, one(Spectrum{{1., 1., 1., 3.}}), 2, false)),
      PreconditionError);
}

TEST_CASE("verdict serialization") {
  const Verdict v = classify_riemannian(riem(3, one(Spectrum{{1., 1., 1.}})));
  const nlohmann::ordered_json j = v.to_json();
  // Key order is part of the report contract.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"conclusion", "theorem", "k",
                                         "points_checked", "caveats"});
  CHECK(j["conclusion"] == "SphericalSpaceForm");
  CHECK(j["k"] == 2);
  CHECK(j["points_checked"] == 1);
  CHECK(j["caveats"].size() == 2);

  // Betti indices appear only for the k-positivity conclusion.
  const Verdict kp = classify_riemannian(
      riem(4, one(Spectrum{{1., 1., 1., 1., 1., 1.}}), 1));
  const nlohmann::ordered_json jk = kp.to_json();
  REQUIRE(jk.contains("betti_vanishing"));
  CHECK(jk["betti_vanishing"] == nlohmann::ordered_json({1, 2, 3}));

  // Conclusion names are stable identifiers.
  CHECK(std::string(to_string(Conclusion::S2xS1OrRP2xS1)) ==
        "S2xS1-or-RP2xS1");
  CHECK(std::string(to_string(Conclusion::BiholomorphicCPn)) ==
        "BiholomorphicCPn");
  CHECK(std::string(to_string(Conclusion::NoConclusion)) == "NoConclusion");
}
