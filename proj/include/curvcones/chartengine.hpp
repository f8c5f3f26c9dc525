// Loads metric charts from JSON, samples their declared point sets, and
// computes the curvature tensor at each sample by nested central differences
// of the Christoffel symbols, expressed in a metric-orthonormal frame.
//
// Chart files look like:
//   {
//     "dimension": 2,
//     "coordinates": ["theta", "phi"],
//     "metric": [["1", "0"], ["0", "sin(theta)^2"]],
//     "samples": {"grid": {"ranges": [[0.4, 2.7], [0, 6.2]],
//                          "counts": [5, 5]}}
//   }
// or use {"points": [[...], ...]} instead of a grid.  Malformed files raise
// SchemaError naming the offending path.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curvcones/expr.hpp"
#include "curvcones/linalg.hpp"
#include "curvcones/riemcurv.hpp"

namespace curvcones {

struct GridSpec {
  std::vector<std::pair<double, double>> ranges;  // inclusive [lo, hi]
  std::vector<std::size_t> counts;                // per-axis, >= 1
};

class MetricChart {
 public:
  static MetricChart from_json(const std::string& json_text);
  static MetricChart load_file(const std::string& path);

  std::size_t dimension() const { return dim_; }
  const std::vector<std::string>& coordinates() const { return coords_; }
  bool has_grid() const { return has_grid_; }
  const GridSpec& grid() const { return grid_; }

  // All declared sample points.  Grids expand to inclusive linspaces in
  // row-major order (last axis fastest); a count of 1 pins the axis at the
  // lower endpoint.
  std::vector<std::vector<double>> sample() const;

  // Metric matrix at a point; entries are evaluated from the stored
  // expressions and symmetrized after the symmetry check.
  linalg::Matrix metric_at(const std::vector<double>& point) const;

  // The canonical rendering of entry (i, j), for reports.
  std::string entry_text(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> coords_;
  std::vector<expr::Expression> entries_;  // row-major dim_ x dim_
  bool text_symmetric_ = false;            // skip numeric symmetry check
  bool has_grid_ = false;
  GridSpec grid_;
  std::vector<std::vector<double>> points_;
};

// Curvature tensor at one point in the metric-orthonormal frame given by
// Gram-Schmidt on the coordinate basis.  Raises DomainError when the
// second-order stencil (width 2*step per side) leaves a grid chart's
// declared ranges, and NumericalError when the metric fails positive
// definiteness (smallest eigenvalue <= 1e-10) or is too ill-conditioned
// (condition number > 1e12) for finite differences to be trusted.
RiemannTensor curvature_at(const MetricChart& chart,
                           const std::vector<double>& point, double step);

struct PointResult {
  std::vector<double> point;
  bool ok = false;
  std::string skip_reason;        // set when !ok
  std::vector<double> spectrum;   // ascending eigenvalues when ok
};

struct ChartEvaluation {
  std::size_t dimension = 0;
  std::vector<PointResult> results;  // in sample() order
};

// Evaluates every sample point, splitting the work over `threads` workers
// (0 = hardware concurrency).  Results are indexed by sample order so the
// outcome is independent of the thread count.  Per-point failures of the
// kinds listed above become skips; anything else propagates.
ChartEvaluation evaluate_chart(const MetricChart& chart, double step,
                               std::size_t threads);

// Reads CURVCONES_THREADS (unset or "0" = automatic).
std::size_t thread_count_from_env();

}  // namespace curvcones
