// Command-line front end: catalog models, chart analysis, raw-spectrum cone
// tests, and the self-contained verification suite.
//
// Exit codes: 0 success, 1 schema error, 2 usage error, 3 numerical failure,
// 4 verification failure.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvcones/chartengine.hpp"
#include "curvcones/classify.hpp"
#include "curvcones/errors.hpp"
#include "curvcones/kahlercurv.hpp"
#include "curvcones/models.hpp"
#include "curvcones/numfmt.hpp"
#include "curvcones/report.hpp"
#include "curvcones/riemcurv.hpp"
#include "curvcones/symcone.hpp"
#include "curvcones/verify.hpp"

using namespace curvcones;

namespace {

void emit(const Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_markdown();
}

PointReport spectrum_point(const Spectrum& raw, const Spectrum& shifted,
                           const ConeVerdict& cv) {
  PointReport p;
  p.spectrum = raw.values();
  p.shifted = shifted.values();
  p.sigma1 = cv.sigmas.empty() ? 0.0 : cv.sigmas[0];
  p.sigma2 = cv.sigmas.size() < 2 ? 0.0 : cv.sigmas[1];
  p.status = cv.status;
  return p;
}

int run_model(const std::string& name, std::size_t k, double tol,
              const std::string& format) {
  const ModelSpec spec = parse_model_id(name);
  const ModelBuild mb = build(spec);

  Report rep;
  rep.input = "model " + name + " (" + spec.describe() + ")";
  rep.k = k;
  rep.tolerance = tol;
  rep.flags = {{"k", std::to_string(k)},
               {"tol", format_double(tol)},
               {"format", format}};

  // Kahler catalog entries are analyzed through the Kahler operator and
  // threshold; everything else through the Riemannian one.
  std::vector<Spectrum> spectra;
  if (mb.kahler) {
    rep.geometry = Geometry::Kahler;
    spectra.push_back(
        kahler_eigen_spectrum(assemble_kahler_operator(*mb.kahler)).spectrum);
  } else if (mb.riemann) {
    rep.geometry = Geometry::Riemannian;
    spectra.push_back(eigen_spectrum(assemble_operator(*mb.riemann)).spectrum);
  } else {
    throw ConsistencyError("catalog model '" + name +
                           "' produced no curvature tensor");
  }

  const Evidence ev =
      Evidence::gather(rep.geometry, spec.dimension(), spectra, k, tol, true);
  rep.alpha = ev.alpha();
  rep.points.push_back(
      spectrum_point(ev.spectra()[0], ev.shifted()[0], ev.verdicts()[0]));
  rep.has_verdict = true;
  rep.verdict = rep.geometry == Geometry::Kahler ? classify_kahler(ev)
                                                 : classify_riemannian(ev);
  emit(rep, format);
  return 0;
}

int run_cones(const std::vector<double>& values, std::size_t k, long kahler_n,
              double tol, const std::string& format) {
  if (values.empty())
    throw ArgumentError("--spectrum must contain at least one value");

  Report rep;
  rep.input = "cones --spectrum " + join_numbers(values);
  rep.k = k;
  rep.tolerance = tol;
  rep.flags.emplace_back("k", std::to_string(k));
  if (kahler_n >= 0)
    rep.flags.emplace_back("kahler-n", std::to_string(kahler_n));
  rep.flags.emplace_back("tol", format_double(tol));
  rep.flags.emplace_back("format", format);

  ShiftParameter alpha;
  if (kahler_n >= 0) {
    const std::size_t n = static_cast<std::size_t>(kahler_n);
    if (values.size() != n * n)
      throw ArgumentError(
          "--spectrum length " + std::to_string(values.size()) +
          " does not match --kahler-n " + std::to_string(n) + " (need n^2 = " +
          std::to_string(n * n) + " eigenvalues)");
    rep.geometry = Geometry::Kahler;
    alpha = shift_threshold(n, k, ShiftKind::Kahler);
  } else {
    rep.geometry = Geometry::Riemannian;
    alpha = shift_threshold(values.size(), k, ShiftKind::Riemannian);
  }
  rep.alpha = alpha.alpha;

  const Spectrum lam{std::vector<double>(values)};
  const Spectrum sh = shift(lam, alpha);
  rep.points.push_back(spectrum_point(lam, sh, cone_membership(sh, 2, tol)));
  rep.has_k_smallest_sum = true;
  rep.k_smallest_sum = k_smallest_sum(lam, k);
  emit(rep, format);
  return 0;
}

int run_analyze(const std::string& path, std::size_t k, double step,
                double tol, const std::string& format) {
  const MetricChart chart = MetricChart::load_file(path);
  const ChartEvaluation eval =
      evaluate_chart(chart, step, thread_count_from_env());

  Report rep;
  rep.input = "analyze " + path;
  rep.geometry = Geometry::Riemannian;
  rep.k = k;
  rep.tolerance = tol;
  rep.has_step = true;
  rep.step = step;
  rep.flags = {{"k", std::to_string(k)},
               {"step", format_double(step)},
               {"tol", format_double(tol)},
               {"format", format}};

  std::vector<Spectrum> spectra;
  std::vector<const PointResult*> witnesses;
  for (const PointResult& r : eval.results) {
    if (r.ok) {
      spectra.push_back(Spectrum{std::vector<double>(r.spectrum)});
      witnesses.push_back(&r);
    } else {
      rep.skipped.push_back({r.point, r.skip_reason});
    }
  }

  if (spectra.empty()) {
    // Nothing evaluable anywhere on the chart: report the skips and fail.
    emit(rep, format);
    return 3;
  }

  const std::size_t n = chart.dimension();
  if (n < 3) {
    // The shifted-cone theorems start at real dimension 3.  Report the raw
    // cone data without any shift and say so.
    rep.alpha = 0.0;
    for (std::size_t i = 0; i < spectra.size(); ++i) {
      const std::size_t depth = std::min<std::size_t>(2, spectra[i].size());
      PointReport p = spectrum_point(spectra[i], spectra[i],
                                     cone_membership(spectra[i], depth, tol));
      p.has_point = true;
      p.point = witnesses[i]->point;
      rep.points.push_back(std::move(p));
    }
    Verdict v;
    v.conclusion = Conclusion::NoConclusion;
    v.theorem = "none";
    v.k = k;
    v.points_checked = spectra.size();
    v.caveats = {
        "dimension below 3: the shifted-cone statements do not apply; raw "
        "cone data reported without a shift"};
    rep.has_verdict = true;
    rep.verdict = std::move(v);
    emit(rep, format);
    return 0;
  }

  const Evidence ev =
      Evidence::gather(Geometry::Riemannian, n, spectra, k, tol, true);
  rep.alpha = ev.alpha();
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    PointReport p =
        spectrum_point(ev.spectra()[i], ev.shifted()[i], ev.verdicts()[i]);
    p.has_point = true;
    p.point = witnesses[i]->point;
    rep.points.push_back(std::move(p));
  }
  rep.has_verdict = true;
  rep.verdict = classify_riemannian(ev);
  emit(rep, format);
  return 0;
}

int run_verify(const std::string& format) {
  const std::vector<CheckResult> results = run_verification();
  if (format == "json")
    std::cout << checks_to_json(results).dump(2) << "\n";
  else
    std::cout << checks_to_markdown(results);
  return all_passed(results) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigenvalue-cone positivity tests for curvature operators"};
  app.require_subcommand(1);

  std::size_t k = 2;
  double tol = 1e-9;
  double step = 1e-3;
  long kahler_n = -1;
  std::string format = "md";
  std::string model_name;
  std::string chart_path;
  std::vector<double> spectrum_values;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();
  };

  CLI::App* model_cmd =
      app.add_subcommand("model", "analyze a catalog model by id");
  model_cmd
      ->add_option("name", model_name,
                   "catalog id: s3, s2xs1, cp1xcp1, sKxs1:<k>, flat:<n>, "
                   "cpn:<n>, hyperbolic:<n>")
      ->required();
  model_cmd->add_option("--k", k, "shift index")->capture_default_str();
  model_cmd->add_option("--tol", tol, "cone tolerance")->capture_default_str();
  add_format(model_cmd);

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "analyze a metric chart file");
  analyze_cmd->add_option("chart", chart_path, "chart JSON file")->required();
  analyze_cmd->add_option("--k", k, "shift index")->capture_default_str();
  analyze_cmd->add_option("--step", step, "finite-difference step")
      ->capture_default_str();
  analyze_cmd->add_option("--tol", tol, "cone tolerance")
      ->capture_default_str();
  add_format(analyze_cmd);

  CLI::App* cones_cmd =
      app.add_subcommand("cones", "cone tests on a raw eigenvalue spectrum");
  cones_cmd
      ->add_option("--spectrum", spectrum_values,
                   "comma-separated operator eigenvalues")
      ->required()
      ->delimiter(',');
  cones_cmd->add_option("--k", k, "shift index")->capture_default_str();
  cones_cmd->add_option(
      "--kahler-n", kahler_n,
      "complex dimension; treat the spectrum as a Kahler operator's");
  cones_cmd->add_option("--tol", tol, "cone tolerance")->capture_default_str();
  add_format(cones_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-paper", "run the full reproduction suite and report each check");
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors, including bad flag values
  }

  try {
    if (*model_cmd) return run_model(model_name, k, tol, format);
    if (*analyze_cmd) return run_analyze(chart_path, k, step, tol, format);
    if (*cones_cmd)
      return run_cones(spectrum_values, k, kahler_n, tol, format);
    return run_verify(format);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // Numerical, validation, consistency, hypothesis, precondition, eval:
    // the computation itself failed.
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
