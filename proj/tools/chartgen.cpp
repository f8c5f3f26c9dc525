// Generates metric-chart JSON files for the analyze command and the test
// fixtures: identity metrics, round spheres (polar or stereographic), and
// hyperbolic balls, with a points or grid sample block.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvcones/chartengine.hpp"
#include "curvcones/errors.hpp"
#include "curvcones/numfmt.hpp"

namespace {

std::string radius_sum(std::size_t n) {
  std::string out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) out += "+";
    out += "x" + std::to_string(i) + "^2";
  }
  return out;
}

std::vector<std::vector<std::string>> build_metric(const std::string& kind,
                                                   std::size_t n) {
  std::vector<std::vector<std::string>> g(
      n, std::vector<std::string>(n, "0"));
  if (kind == "flat") {
    for (std::size_t i = 0; i < n; ++i) g[i][i] = "1";
  } else if (kind == "stereo") {
    // Round unit sphere in stereographic coordinates.
    const std::string entry = "4/(1+" + radius_sum(n) + ")^2";
    for (std::size_t i = 0; i < n; ++i) g[i][i] = entry;
  } else if (kind == "ball") {
    // Hyperbolic space (curvature -1) on the Poincare ball.
    const std::string entry = "4/(1-(" + radius_sum(n) + "))^2";
    for (std::size_t i = 0; i < n; ++i) g[i][i] = entry;
  } else if (kind == "polar") {
    // Round unit sphere in nested polar coordinates:
    // diag(1, sin^2 x1, sin^2 x1 sin^2 x2, ...).
    for (std::size_t i = 0; i < n; ++i) {
      std::string entry = "1";
      for (std::size_t j = 0; j < i; ++j)
        entry += "*sin(x" + std::to_string(j + 1) + ")^2";
      g[i][i] = entry;
    }
  } else {
    throw curvcones::ArgumentError("unknown chart kind '" + kind + "'");
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric chart generator"};

  std::string kind = "flat";
  std::size_t dim = 3;
  std::string out_path;
  std::vector<std::vector<double>> points;
  std::vector<double> grid_range;  // lo hi count
  app.add_option("--kind", kind, "flat, stereo, ball, or polar")
      ->check(CLI::IsMember({"flat", "stereo", "ball", "polar"}))
      ->capture_default_str();
  app.add_option("--dim", dim, "chart dimension")->capture_default_str();
  app.add_option("--point", points,
                 "sample point, comma-separated (repeatable)")
      ->delimiter(',');
  app.add_option("--grid", grid_range,
                 "uniform grid: lo,hi,count applied to every axis")
      ->delimiter(',')
      ->expected(3);
  app.add_option("--out", out_path, "output file (default stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    if (dim < 2) throw curvcones::ArgumentError("--dim must be at least 2");

    nlohmann::ordered_json chart;
    chart["dimension"] = dim;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= dim; ++i)
      coords.push_back("x" + std::to_string(i));
    chart["coordinates"] = std::move(coords);
    chart["metric"] = build_metric(kind, dim);

    nlohmann::ordered_json samples;
    if (!grid_range.empty()) {
      const double lo = grid_range[0], hi = grid_range[1];
      const auto count = static_cast<std::size_t>(grid_range[2]);
      nlohmann::ordered_json ranges = nlohmann::ordered_json::array();
      nlohmann::ordered_json counts = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < dim; ++i) {
        ranges.push_back({lo, hi});
        counts.push_back(count);
      }
      samples["grid"] = {{"ranges", std::move(ranges)},
                         {"counts", std::move(counts)}};
    } else {
      if (points.empty())
        points.push_back(std::vector<double>(dim, 0.25));
      for (const auto& p : points)
        if (p.size() != dim)
          throw curvcones::ArgumentError(
              "--point needs exactly " + std::to_string(dim) +
              " coordinates");
      samples["points"] = points;
    }
    chart["samples"] = std::move(samples);

    const std::string text = chart.dump(2) + "\n";
    // Round-trip through the loader so emitted files are schema-valid.
    curvcones::MetricChart::from_json(text);

    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out)
        throw curvcones::ArgumentError("cannot open '" + out_path +
                                       "' for writing");
      out << text;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
