// Report assembly for the CLI: one structure covering model, chart, and raw-
// spectrum runs, rendered to Markdown or JSON.  Rendering is deterministic:
// fixed key order, shortest round-trip number formatting, point order given
// by the deterministic sample order.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvcones/classify.hpp"
#include "curvcones/geometry.hpp"
#include "curvcones/symcone.hpp"

namespace curvcones {

struct PointReport {
  bool has_point = false;
  std::vector<double> point;     // chart coordinates, when applicable
  std::vector<double> spectrum;  // ascending operator eigenvalues
  std::vector<double> shifted;   // after the alpha shift
  double sigma1 = 0.0;           // of the shifted spectrum
  double sigma2 = 0.0;
  ConeStatus status = ConeStatus::Outside;
};

struct SkippedPoint {
  std::vector<double> point;
  std::string reason;
};

struct Report {
  std::string input;
  Geometry geometry = Geometry::Riemannian;
  std::size_t k = 0;
  double alpha = 0.0;
  double tolerance = 0.0;
  bool has_step = false;
  double step = 0.0;
  std::vector<std::pair<std::string, std::string>> flags;  // echoed, ordered

  std::vector<PointReport> points;
  std::vector<SkippedPoint> skipped;

  bool has_k_smallest_sum = false;
  double k_smallest_sum = 0.0;

  bool has_verdict = false;
  Verdict verdict;

  nlohmann::ordered_json to_json() const;
  std::string to_markdown() const;
};

// Joins numbers with ", " using the deterministic formatter.
std::string join_numbers(const std::vector<double>& values);

}  // namespace curvcones
