#include "curvcones/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "curvcones/chartengine.hpp"
#include "curvcones/classify.hpp"
#include "curvcones/errors.hpp"
#include "curvcones/kahlercurv.hpp"
#include "curvcones/lemmalab.hpp"
#include "curvcones/models.hpp"
#include "curvcones/numfmt.hpp"
#include "curvcones/riemcurv.hpp"
#include "curvcones/symcone.hpp"

namespace curvcones {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Baked-in reference charts so the suite needs no data files.
constexpr const char* kSphereChart = R"({
  "dimension": 2,
  "coordinates": ["x1", "x2"],
  "metric": [["1", "0"], ["0", "sin(x1)^2"]],
  "samples": {"points": [[1.0, 0.5], [0.7, 2.0], [1.3, 4.0]]}
})";

constexpr const char* kStereoChart = R"({
  "dimension": 3,
  "coordinates": ["x1", "x2", "x3"],
  "metric": [["4/(1+x1^2+x2^2+x3^2)^2", "0", "0"],
             ["0", "4/(1+x1^2+x2^2+x3^2)^2", "0"],
             ["0", "0", "4/(1+x1^2+x2^2+x3^2)^2"]],
  "samples": {"points": [[0.1, 0.2, -0.3]]}
})";

constexpr const char* kFlatChart = R"({
  "dimension": 3,
  "coordinates": ["x1", "x2", "x3"],
  "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
  "samples": {"points": [[0.3, -0.2, 0.5]]}
})";

std::vector<double> operator_spectrum(const RiemannTensor& r) {
  return eigen_spectrum(assemble_operator(r)).spectrum.values();
}

// ---- check 1: stored CP^2 spectrum -------------------------------------
Outcome check_cp2_golden() {
  Outcome out;
  const ModelBuild mb = build(ModelSpec::fubini_study(2));
  if (!mb.riemann) return {false, "catalog CP^2 carries no real tensor"};
  const CurvatureOperatorMatrix op = assemble_operator(*mb.riemann);

  // The assembled operator must equal the stored literal matrix.
  const linalg::Matrix& stored = cp2_operator();
  double literal_err = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      literal_err =
          std::max(literal_err, std::fabs(op.entries(i, j) - stored(i, j)));

  const std::vector<double> spec = operator_spectrum(*mb.riemann);
  const double target[6] = {0, 0, 1, 1, 1, 3};
  const double lmax = spec.back();
  double ratio_err = 0.0;
  if (!(lmax > 0)) return {false, "top eigenvalue not positive"};
  for (std::size_t i = 0; i < 6; ++i)
    ratio_err = std::max(ratio_err,
                         std::fabs(spec[i] * (3.0 / lmax) - target[i]));
  out.ok = ratio_err <= 1e-8 && literal_err <= 1e-12;
  out.detail = "eigenvalue ratio error " + format_double(ratio_err) +
               " (budget 1e-08), literal-matrix error " +
               format_double(literal_err);
  return out;
}

// ---- check 2: product boundary calibration ------------------------------
Outcome check_sphere_circle() {
  Outcome out;
  double worst1 = 0.0, worst2 = 0.0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::size_t k = n - 1;  // sphere factor dimension
    const std::size_t N = n * (n - 1) / 2;
    const ModelBuild mb = build(
        ModelSpec::product(ModelSpec::round_sphere(k), ModelSpec::flat(1)));
    const Spectrum lam(operator_spectrum(*mb.riemann));
    const ShiftParameter alpha = shift_threshold(N, k, ShiftKind::Riemannian);
    const Spectrum sh = shift(lam, alpha);
    const double s1 = elementary_symmetric(sh.values(), 1);
    const double s2 = elementary_symmetric(sh.values(), 2);
    const double expected =
        std::sqrt(static_cast<double>(k) * static_cast<double>(N - k) /
                  static_cast<double>(N - 1));
    worst1 = std::max(worst1, std::fabs(s1 - expected));
    worst2 = std::max(worst2, std::fabs(s2));
  }
  out.ok = worst1 <= 1e-10 && worst2 <= 1e-10;
  out.detail = "max |sigma1 - closed form| " + format_double(worst1) +
               ", max |sigma2| " + format_double(worst2) +
               " over n = 3..8 (budget 1e-10)";
  return out;
}

// ---- check 3: round sphere family ---------------------------------------
Outcome check_round_spheres() {
  Outcome out;
  double worst_id = 0.0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const ModelBuild mb = build(ModelSpec::round_sphere(n));
    const CurvatureOperatorMatrix op = assemble_operator(*mb.riemann);
    for (std::size_t i = 0; i < op.N; ++i)
      for (std::size_t j = 0; j < op.N; ++j)
        worst_id = std::max(
            worst_id,
            std::fabs(op.entries(i, j) - (i == j ? 1.0 : 0.0)));

    const std::size_t N = op.N;
    const Spectrum lam(operator_spectrum(*mb.riemann));
    for (std::size_t k = 1; k <= N - 1; ++k) {
      const Spectrum sh =
          shift(lam, shift_threshold(N, k, ShiftKind::Riemannian));
      if (cone_membership(sh, 2, 1e-9).status != ConeStatus::Interior)
        return {false, "round S^" + std::to_string(n) +
                           " not interior at k = " + std::to_string(k)};
    }

    const Evidence e =
        Evidence::gather(Geometry::Riemannian, n, {lam}, 2, 1e-9, true);
    const Verdict v = classify_riemannian(e);
    if (v.conclusion != Conclusion::SphericalSpaceForm)
      return {false, "round S^" + std::to_string(n) +
                         " classified as " + to_string(v.conclusion)};
  }
  out.ok = worst_id <= 1e-10;
  out.detail = "max |operator - identity| " + format_double(worst_id) +
               " (budget 1e-10); interior at every k; verdict "
               "SphericalSpaceForm for n = 3..8";
  return out;
}

// ---- check 4: scalar equals twice the eigenvalue sum --------------------
Outcome check_scalar_trace() {
  Outcome out;
  std::vector<RiemannTensor> tensors;
  const char* ids[] = {"s3",    "s2xs1",       "sKxs1:3", "sKxs1:5",
                       "flat:3", "flat:5",     "hyperbolic:3",
                       "hyperbolic:4", "cpn:2"};
  for (const char* id : ids) {
    const ModelBuild mb = build(parse_model_id(id));
    if (mb.riemann) tensors.push_back(*mb.riemann);
  }
  for (const char* text : {kSphereChart, kStereoChart, kFlatChart}) {
    const MetricChart chart = MetricChart::from_json(text);
    for (const auto& pt : chart.sample())
      tensors.push_back(curvature_at(chart, pt, 1e-3));
  }
  double worst = 0.0;
  for (const RiemannTensor& r : tensors) {
    const double s = scalar(r);
    double sum = 0.0;
    for (double v : operator_spectrum(r)) sum += v;
    const double rel = std::fabs(s - 2.0 * sum) / std::max(1.0, std::fabs(s));
    worst = std::max(worst, rel);
  }
  out.ok = worst <= 1e-8;
  out.detail = "max relative error " + format_double(worst) + " over " +
               std::to_string(tensors.size()) +
               " catalog and finite-difference tensors (budget 1e-08)";
  return out;
}

// ---- check 5: interpolation machinery ------------------------------------
Outcome check_interpolation() {
  Outcome out;
  std::mt19937_64 rng(20260819u);
  std::uniform_real_distribution<double> entry(0.2, 2.0);
  std::uniform_real_distribution<double> tail(0.5, 2.0);
  std::uniform_real_distribution<double> bump(0.0, 0.1);

  double worst_f0 = 0.0, worst_fp = 0.0, worst_fpp = 0.0, worst_grid = 0.0;
  std::size_t problems = 0, hypothesis_cases = 0;

  for (std::size_t N = 3; N <= 10; ++N) {
    for (std::size_t k = 1; k + 2 <= N; ++k) {
      std::size_t accepted = 0, attempts = 0;
      while (accepted < 10000) {
        if (++attempts > 2000000)
          return {false, "sampler starved at N=" + std::to_string(N) +
                             " k=" + std::to_string(k)};
        std::vector<double> draw(N);
        const std::size_t mode = attempts % 10;
        if (mode == 0) {
          // Exact degenerate profile: the hypothesis batch.
          const double c = tail(rng);
          for (std::size_t i = 0; i < N; ++i) draw[i] = i < k ? 0.0 : c;
        } else if (mode <= 2) {
          const double c = tail(rng);
          for (std::size_t i = 0; i < N; ++i)
            draw[i] = (i < k ? 0.0 : c) + bump(rng);
        } else {
          for (std::size_t i = 0; i < N; ++i) draw[i] = entry(rng);
        }
        const Spectrum s{std::vector<double>(draw)};
        if (!(s.total() > 0)) continue;
        const InterpolationProblem problem =
            InterpolationProblem::create(s, k);
        // Certification: the shifted normalized spectrum must sit in the
        // closed 2-positive cone without any tolerance slack.  The exact
        // degenerate profiles land on the boundary, where sigma2 vanishes
        // in exact arithmetic; allow them their roundoff.
        const double s1 = elementary_symmetric(problem.shifted(), 1);
        const double s2 = elementary_symmetric(problem.shifted(), 2);
        const double floor2 = mode == 0 ? -1e-12 : 0.0;
        if (!(s1 >= 0.0 && s2 >= floor2)) continue;
        ++accepted;
        ++problems;

        const double f0 = f_value(problem, 0.0);
        worst_f0 = std::max(worst_f0, std::fabs(f0));

        const double fp = f_prime_zero(problem);
        double head = 0.0;
        for (std::size_t i = 0; i < k; ++i) head += problem.lambda()[i];
        const double fp_fd = fd_prime_zero(problem);
        worst_fp = std::max(worst_fp, std::fabs(fp - head));
        worst_fp = std::max(worst_fp, std::fabs(fp - fp_fd));

        if (std::fabs(fp) <= 1e-10) {
          ++hypothesis_cases;
          const double fpp = f_double_prime_zero(problem);
          const double fpp_fd = fd_double_prime_zero(problem);
          worst_fpp = std::max(worst_fpp, std::fabs(fpp - fpp_fd));
        }

        // Convexity of the closed cone along the interpolation path.
        for (int g = 0; g <= 100; ++g) {
          const double f = f_value(problem, g / 100.0);
          if (f < 0.0) worst_grid = std::max(worst_grid, -f);
        }

        const Spectrum normalized{std::vector<double>(problem.lambda())};
        if (dichotomy_check(normalized, k) == DichotomyResult::Violation)
          return {false, "dichotomy violation at N=" + std::to_string(N) +
                             " k=" + std::to_string(k)};
      }
    }
  }
  out.ok = worst_f0 <= 1e-12 && worst_fp <= 1e-6 && worst_fpp <= 1e-5 &&
           worst_grid <= 1e-10 && hypothesis_cases > 0;
  out.detail = std::to_string(problems) + " certified problems; |f(0)| " +
               format_double(worst_f0) + ", f'(0) error " +
               format_double(worst_fp) + ", f''(0) error " +
               format_double(worst_fpp) + " (" +
               std::to_string(hypothesis_cases) +
               " hypothesis cases), grid negativity " +
               format_double(worst_grid);
  return out;
}

// ---- check 6: cone monotonicity and nesting -----------------------------
Outcome check_monotonicity() {
  Outcome out;
  std::mt19937_64 rng(4025u);
  std::uniform_real_distribution<double> entry(-0.3, 1.7);
  std::uniform_int_distribution<std::size_t> dim(3, 12);

  std::size_t accepted = 0, nesting_checked = 0, nontrivial = 0;
  std::size_t attempts = 0;
  while (accepted < 100000) {
    if (++attempts > 3000000) return {false, "sampler starved"};
    const std::size_t N = dim(rng);
    std::vector<double> draw(N);
    for (double& v : draw) v = entry(rng);
    const Spectrum s{std::move(draw)};

    std::uniform_int_distribution<std::size_t> kpick(1, N - 1);
    std::size_t k1 = kpick(rng), k2 = kpick(rng);
    if (k1 > k2) std::swap(k1, k2);

    const Spectrum sh1 =
        shift(s, shift_threshold(N, k1, ShiftKind::Riemannian));
    const double a1 = elementary_symmetric(sh1.values(), 1);
    const double a2 = elementary_symmetric(sh1.values(), 2);
    if (!(a1 > 0.0 && a2 > 0.0)) continue;  // not in the smaller cone
    ++accepted;

    const Spectrum sh2 =
        shift(s, shift_threshold(N, k2, ShiftKind::Riemannian));
    const double b1 = elementary_symmetric(sh2.values(), 1);
    const double b2 = elementary_symmetric(sh2.values(), 2);
    if (b1 < -1e-12 || b2 < -1e-12)
      return {false,
              "monotonicity counterexample: sigma1 " + format_double(b1) +
                  ", sigma2 " + format_double(b2) + " at N=" +
                  std::to_string(N) + " k1=" + std::to_string(k1) +
                  " k2=" + std::to_string(k2)};

    // Cone nesting on the same shifted spectrum.
    std::uniform_int_distribution<std::size_t> jpick(1, N - 1);
    const std::size_t j = jpick(rng);
    ++nesting_checked;
    if (cone_membership(sh1, j + 1).status == ConeStatus::Interior) {
      ++nontrivial;
      if (cone_membership(sh1, j).status != ConeStatus::Interior)
        return {false, "nesting counterexample at j=" + std::to_string(j)};
    }
  }
  out.ok = true;
  out.detail = std::to_string(accepted) +
               " certified samples, zero counterexamples; nesting checked " +
               std::to_string(nesting_checked) + " times (" +
               std::to_string(nontrivial) + " non-vacuous)";
  return out;
}

// ---- check 7: finite-difference engine ----------------------------------
double spectrum_error_vs_one(const MetricChart& chart,
                             const std::vector<double>& pt, double step) {
  const RiemannTensor r = curvature_at(chart, pt, step);
  double worst = 0.0;
  for (double v : operator_spectrum(r))
    worst = std::max(worst, std::fabs(v - 1.0));
  return worst;
}

Outcome check_fd_charts() {
  Outcome out;
  const MetricChart s2 = MetricChart::from_json(kSphereChart);
  const MetricChart s3 = MetricChart::from_json(kStereoChart);

  double worst = 0.0;
  for (const auto& pt : s2.sample())
    worst = std::max(worst, spectrum_error_vs_one(s2, pt, 1e-3));
  const std::vector<double> s3pt = s3.sample().front();
  worst = std::max(worst, spectrum_error_vs_one(s3, s3pt, 1e-3));

  const double e2_coarse =
      spectrum_error_vs_one(s2, s2.sample().front(), 2e-3);
  const double e2_fine = spectrum_error_vs_one(s2, s2.sample().front(), 1e-3);
  const double e3_coarse = spectrum_error_vs_one(s3, s3pt, 2e-3);
  const double e3_fine = spectrum_error_vs_one(s3, s3pt, 1e-3);
  const double factor2 = e2_coarse / e2_fine;
  const double factor3 = e3_coarse / e3_fine;

  out.ok = worst <= 1e-4 && factor2 >= 3.5 && factor2 <= 4.5 &&
           factor3 >= 3.5 && factor3 <= 4.5;
  out.detail = "max eigenvalue error " + format_double(worst) +
               " at step 1e-3 (budget 1e-04); halving factors " +
               format_double(factor2) + " (S^2 chart), " +
               format_double(factor3) + " (S^3 chart), budget [3.5, 4.5]";
  return out;
}

// ---- check 8: Kahler suite ----------------------------------------------
// Projects a raw complex 4-index array onto the Kahler symmetry class.
std::vector<std::complex<double>> project_kahler(
    std::size_t n, const std::vector<std::complex<double>>& g) {
  auto idx = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return ((a * n + b) * n + c) * n + d;
  };
  std::vector<std::complex<double>> pair_sym(g.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          pair_sym[idx(a, b, c, d)] =
              0.25 * (g[idx(a, b, c, d)] + g[idx(c, b, a, d)] +
                      g[idx(a, d, c, b)] + g[idx(c, d, a, b)]);
  std::vector<std::complex<double>> herm(g.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          herm[idx(a, b, c, d)] =
              0.5 * (pair_sym[idx(a, b, c, d)] +
                     std::conj(pair_sym[idx(b, a, d, c)]));
  return herm;
}

Outcome check_kahler_suite() {
  Outcome out;
  std::mt19937_64 rng(99173u);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double worst_identity = 0.0;
  std::size_t tensors = 0;
  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + t % 3;
    std::vector<std::complex<double>> g(n * n * n * n);
    for (auto& v : g) v = std::complex<double>(gauss(rng), gauss(rng));
    const KahlerCurvatureTensor tensor(n, project_kahler(n, g));
    ++tensors;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const IdentitySides sides =
            orthogonal_bisectional_identity(tensor, i, j);
        worst_identity =
            std::max(worst_identity, std::fabs(sides.lhs - sides.rhs) /
                                         std::max(1.0, std::fabs(sides.lhs)));
      }
  }
  if (worst_identity > 1e-9)
    return {false,
            "bisectional identity error " + format_double(worst_identity)};

  // Fubini-Study spectra against the closed-form oracle (1,...,1, n+1).
  double worst_fs = 0.0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::vector<double> spec =
        kahler_eigen_spectrum(
            assemble_kahler_operator(KahlerCurvatureTensor::fubini_study(n, 1.0)))
            .spectrum.values();
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const double expected =
          i + 1 == spec.size() ? static_cast<double>(n + 1) : 1.0;
      worst_fs = std::max(worst_fs, std::fabs(spec[i] - expected));
    }
  }
  if (worst_fs > 1e-10)
    return {false, "Fubini-Study spectrum error " + format_double(worst_fs)};

  // Product-of-lines boundary: shifted sigma_2 vanishes.
  const ModelBuild lines = build(parse_model_id("cp1xcp1"));
  const Spectrum lam(kahler_eigen_spectrum(
                         assemble_kahler_operator(*lines.kahler))
                         .spectrum.values());
  const Spectrum sh = shift(lam, shift_threshold(2, 2, ShiftKind::Kahler));
  const double s2 = elementary_symmetric(sh.values(), 2);
  if (std::fabs(s2) > 1e-10)
    return {false, "product boundary sigma2 " + format_double(s2)};

  // Classification branches.
  const Spectrum fs2(kahler_eigen_spectrum(
                         assemble_kahler_operator(
                             KahlerCurvatureTensor::fubini_study(2, 1.0)))
                         .spectrum.values());
  const Verdict v1 = classify_kahler(
      Evidence::gather(Geometry::Kahler, 2, {fs2}, 2, 1e-9, true));
  const Verdict v2 = classify_kahler(
      Evidence::gather(Geometry::Kahler, 2, {lam}, 2, 1e-9, true));
  const Spectrum zero{std::vector<double>(4, 0.0)};
  const Verdict v3 = classify_kahler(
      Evidence::gather(Geometry::Kahler, 2, {zero}, 2, 1e-9, true));
  if (v1.conclusion != Conclusion::BiholomorphicCPn)
    return {false, "projective-space branch classified as " +
                       std::string(to_string(v1.conclusion))};
  if (v2.conclusion != Conclusion::CP1xCP1)
    return {false, "product branch classified as " +
                       std::string(to_string(v2.conclusion))};
  if (v3.conclusion != Conclusion::FlatTorus)
    return {false, "flat branch classified as " +
                       std::string(to_string(v3.conclusion))};

  out.ok = true;
  out.detail = "identity relative error " + format_double(worst_identity) +
               " over " + std::to_string(tensors) +
               " random tensors (budget 1e-09); Fubini-Study spectrum error " +
               format_double(worst_fs) + "; boundary sigma2 " +
               format_double(s2) + "; all three classification branches hit";
  return out;
}

// ---- check 9: Betti table ------------------------------------------------
Outcome check_betti_table() {
  struct Row {
    std::size_t n, k;
    std::vector<std::size_t> vanishing;
  };
  // Literal transcription of the two vanishing statements, written out by
  // hand for every pair 3 <= n <= 10, 1 <= k <= n-1.
  const std::vector<Row> table = {
      {3, 1, {1, 2}},
      {3, 2, {1, 2}},
      {4, 1, {1, 2, 3}},
      {4, 2, {1, 2, 3}},
      {4, 3, {1, 3}},
      {5, 1, {1, 2, 3, 4}},
      {5, 2, {1, 2, 3, 4}},
      {5, 3, {1, 2, 3, 4}},
      {5, 4, {1, 4}},
      {6, 1, {1, 2, 3, 4, 5}},
      {6, 2, {1, 2, 3, 4, 5}},
      {6, 3, {1, 2, 3, 4, 5}},
      {6, 4, {1, 2, 4, 5}},
      {6, 5, {1, 5}},
      {7, 1, {1, 2, 3, 4, 5, 6}},
      {7, 2, {1, 2, 3, 4, 5, 6}},
      {7, 3, {1, 2, 3, 4, 5, 6}},
      {7, 4, {1, 2, 3, 4, 5, 6}},
      {7, 5, {1, 2, 5, 6}},
      {7, 6, {1, 6}},
      {8, 1, {1, 2, 3, 4, 5, 6, 7}},
      {8, 2, {1, 2, 3, 4, 5, 6, 7}},
      {8, 3, {1, 2, 3, 4, 5, 6, 7}},
      {8, 4, {1, 2, 3, 4, 5, 6, 7}},
      {8, 5, {1, 2, 3, 5, 6, 7}},
      {8, 6, {1, 2, 6, 7}},
      {8, 7, {1, 7}},
      {9, 1, {1, 2, 3, 4, 5, 6, 7, 8}},
      {9, 2, {1, 2, 3, 4, 5, 6, 7, 8}},
      {9, 3, {1, 2, 3, 4, 5, 6, 7, 8}},
      {9, 4, {1, 2, 3, 4, 5, 6, 7, 8}},
      {9, 5, {1, 2, 3, 4, 5, 6, 7, 8}},
      {9, 6, {1, 2, 3, 6, 7, 8}},
      {9, 7, {1, 2, 7, 8}},
      {9, 8, {1, 8}},
      {10, 1, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
      {10, 2, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
      {10, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
      {10, 4, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
      {10, 5, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
      {10, 6, {1, 2, 3, 4, 6, 7, 8, 9}},
      {10, 7, {1, 2, 3, 7, 8, 9}},
      {10, 8, {1, 2, 8, 9}},
      {10, 9, {1, 9}},
  };
  std::size_t covered = 0;
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      const Row* row = nullptr;
      for (const Row& r : table)
        if (r.n == n && r.k == k) row = &r;
      if (row == nullptr)
        return {false, "transcription missing n=" + std::to_string(n) +
                           " k=" + std::to_string(k)};
      const BettiResult got = betti_vanishing(n, k);
      if (got.indices != row->vanishing || !got.caveat.empty())
        return {false, "mismatch at n=" + std::to_string(n) +
                           " k=" + std::to_string(k)};
      ++covered;
    }
  }
  // Outside the stated range: empty with caveat.
  const BettiResult outside = betti_vanishing(5, 5);
  if (!outside.indices.empty() || outside.caveat.empty())
    return {false, "out-of-range k must yield an empty set with a caveat"};
  return {true, "exhaustive match on " + std::to_string(covered) +
                    " (n, k) pairs, 3 <= n <= 10"};
}

// ---- check 10: splitting and pinching arithmetic -------------------------
Outcome check_splitting_pinching() {
  // Unique admissible Riemannian splitting with m >= 2, n >= 3, m >= n-m.
  for (std::size_t n = 3; n <= 40; ++n)
    for (std::size_t m = 2; m + 1 <= n; ++m) {
      if (m < n - m) continue;
      const bool admissible =
          splitting_bound(n, m, Geometry::Riemannian).admissible;
      if (admissible != (n == 3 && m == 2))
        return {false, "Riemannian splitting admissibility wrong at (m,n)=(" +
                           std::to_string(m) + "," + std::to_string(n) + ")"};
    }
  // Unique admissible Kahler splitting.
  for (std::size_t n = 2; n <= 40; ++n)
    for (std::size_t m = 1; m + 1 <= n; ++m) {
      const bool admissible =
          splitting_bound(n, m, Geometry::Kahler).admissible;
      if (admissible != (n == 2 && m == 1))
        return {false, "Kahler splitting admissibility wrong at (m,n)=(" +
                           std::to_string(m) + "," + std::to_string(n) + ")"};
    }

  // Pinching and Einstein-constant closed forms at pseudo-random (n, a),
  // compared against independently rearranged expressions.
  std::mt19937_64 rng(555u);
  std::uniform_real_distribution<double> apick(0.1, 5.0);
  std::uniform_int_distribution<std::size_t> npick(3, 12);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = npick(rng);
    const double a = apick(rng);
    const double dn = static_cast<double>(n);

    const auto [rlo, rhi] = pinching_bounds(n, a, Geometry::Riemannian);
    worst = std::max(worst, std::fabs(rlo - (a - 4.0 * a / dn)));
    worst = std::max(worst, std::fabs(rhi - a));
    const auto [klo, khi] = pinching_bounds(n, a, Geometry::Kahler);
    worst = std::max(worst, std::fabs(klo - (a - 2.0 * a / dn)));
    worst = std::max(worst, std::fabs(khi - a));

    const double er = einstein_constant(n, a, Geometry::Riemannian);
    worst = std::max(worst, std::fabs(er - a * (dn - 1.0 - 4.0 / dn)));
    worst = std::max(worst, std::fabs(er - 2.0 * (dn * (dn - 1.0) / 2.0 - 2.0) *
                                               a / dn));
    const double ek = einstein_constant(n, a, Geometry::Kahler);
    worst = std::max(worst, std::fabs(ek - (a * dn - 2.0 * a / dn)));
  }
  if (worst > 1e-12)
    return {false, "closed-form mismatch " + format_double(worst)};
  return {true,
          "unique admissible splittings confirmed; closed-form max error " +
              format_double(worst) + " over 10 random (n, a)"};
}

struct Entry {
  const char* name;
  double budget_ms;
  Outcome (*fn)();
};

}  // namespace

std::vector<CheckResult> run_verification() {
  const Entry entries[] = {
      {"cp2-golden-spectrum", 10.0, check_cp2_golden},
      {"sphere-circle-boundary", 10.0, check_sphere_circle},
      {"round-sphere-family", 50.0, check_round_spheres},
      {"scalar-trace-identity", 1000.0, check_scalar_trace},
      {"interpolation-suite", 30000.0, check_interpolation},
      {"monotonicity-nesting", 10000.0, check_monotonicity},
      {"fd-charts", 1000.0, check_fd_charts},
      {"kahler-suite", 5000.0, check_kahler_suite},
      {"betti-table", 1.0, check_betti_table},
      {"splitting-pinching", 1.0, check_splitting_pinching},
  };
  std::vector<CheckResult> results;
  for (const Entry& e : entries) {
    CheckResult r;
    r.name = e.name;
    r.budget_ms = e.budget_ms;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = e.fn();
    } catch (const std::exception& ex) {
      outcome.ok = false;
      outcome.detail = std::string("unexpected error: ") + ex.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    r.passed = outcome.ok && r.elapsed_ms <= e.budget_ms;
    r.detail = outcome.detail;
    if (outcome.ok && r.elapsed_ms > e.budget_ms)
      r.detail += " [budget exceeded: " + format_double(r.elapsed_ms) +
                  " ms > " + format_double(e.budget_ms) + " ms]";
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

std::string checks_to_markdown(const std::vector<CheckResult>& results) {
  std::ostringstream md;
  md << "# verification checks\n\n";
  for (const CheckResult& r : results) {
    md << "- [" << (r.passed ? "pass" : "FAIL") << "] " << r.name << " ("
       << format_double(r.elapsed_ms) << " ms, budget "
       << format_double(r.budget_ms) << " ms): " << r.detail << "\n";
  }
  md << "\n" << (all_passed(results) ? "all checks passed" : "FAILURES above")
     << "\n";
  return md.str();
}

nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["passed"] = r.passed;
    e["elapsed_ms"] = r.elapsed_ms;
    e["budget_ms"] = r.budget_ms;
    e["detail"] = r.detail;
    arr.push_back(std::move(e));
  }
  nlohmann::ordered_json j;
  j["checks"] = std::move(arr);
  j["all_passed"] = all_passed(results);
  return j;
}

}  // namespace curvcones
