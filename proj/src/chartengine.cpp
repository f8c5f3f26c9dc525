#include "curvcones/chartengine.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "curvcones/errors.hpp"
#include "curvcones/numfmt.hpp"

namespace curvcones {

namespace {

using nlohmann::json;

bool identifier_shaped(const std::string& s) {
  if (s.empty()) return false;
  auto start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!start(s[0])) return false;
  for (char c : s.substr(1))
    if (!start(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

bool reserved_name(const std::string& s) {
  static const char* kReserved[] = {"pi", "e",    "sin",  "cos",  "tan",
                                    "exp", "log",  "sqrt", "sinh", "cosh",
                                    "tanh", "abs"};
  for (const char* r : kReserved)
    if (s == r) return true;
  return false;
}

const json& require_key(const json& j, const char* key, const char* where) {
  if (!j.contains(key))
    throw SchemaError(std::string(where) + ": missing key '" + key + "'");
  return j.at(key);
}

std::size_t require_uint(const json& j, const std::string& where) {
  if (!j.is_number_unsigned())
    throw SchemaError(where + ": must be a non-negative integer");
  return j.get<std::size_t>();
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": must be a number");
  return j.get<double>();
}

}  // namespace

MetricChart MetricChart::from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw SchemaError(std::string("chart is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw SchemaError("chart: root must be an object");

  MetricChart chart;
  chart.dim_ = require_uint(require_key(j, "dimension", "chart"), "dimension");
  if (chart.dim_ < 2)
    throw SchemaError("dimension: must be an integer >= 2");
  if (chart.dim_ > 16)
    throw SchemaError("dimension: charts above dimension 16 are not supported");
  const std::size_t n = chart.dim_;

  const json& jc = require_key(j, "coordinates", "chart");
  if (!jc.is_array() || jc.size() != n)
    throw SchemaError("coordinates: must be an array of " +
                      std::to_string(n) + " names");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "coordinates[" + std::to_string(i) + "]";
    if (!jc[i].is_string()) throw SchemaError(where + ": must be a string");
    const std::string name = jc[i].get<std::string>();
    if (!identifier_shaped(name))
      throw SchemaError(where + ": '" + name + "' is not a valid identifier");
    if (reserved_name(name))
      throw SchemaError(where + ": '" + name +
                        "' collides with a built-in function or constant");
    for (const std::string& prev : chart.coords_)
      if (prev == name)
        throw SchemaError(where + ": duplicate coordinate '" + name + "'");
    chart.coords_.push_back(name);
  }

  const json& jm = require_key(j, "metric", "chart");
  if (!jm.is_array() || jm.size() != n)
    throw SchemaError("metric: must be an array of " + std::to_string(n) +
                      " rows");
  std::vector<std::string> raw(n * n);
  chart.entries_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = jm[i];
    const std::string rw = "metric[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n)
      throw SchemaError(rw + ": must be an array of " + std::to_string(n) +
                        " expressions");
    for (std::size_t k = 0; k < n; ++k) {
      const std::string where = rw + "[" + std::to_string(k) + "]";
      if (!row[k].is_string())
        throw SchemaError(where + ": must be an expression string");
      raw[i * n + k] = row[k].get<std::string>();
      try {
        chart.entries_[i * n + k] = expr::parse(raw[i * n + k], chart.coords_);
      } catch (const ParseError& ex) {
        throw SchemaError(where + ": " + ex.what());
      }
    }
  }
  chart.text_symmetric_ = true;
  for (std::size_t i = 0; i < n && chart.text_symmetric_; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (raw[i * n + k] != raw[k * n + i]) {
        chart.text_symmetric_ = false;
        break;
      }

  const json& js = require_key(j, "samples", "chart");
  if (!js.is_object()) throw SchemaError("samples: must be an object");
  const bool has_grid = js.contains("grid");
  const bool has_points = js.contains("points");
  if (has_grid == has_points)
    throw SchemaError("samples: must contain exactly one of 'grid', 'points'");

  if (has_grid) {
    chart.has_grid_ = true;
    const json& jg = js.at("grid");
    if (!jg.is_object()) throw SchemaError("samples.grid: must be an object");
    const json& jr = require_key(jg, "ranges", "samples.grid");
    const json& jn = require_key(jg, "counts", "samples.grid");
    if (!jr.is_array() || jr.size() != n)
      throw SchemaError("samples.grid.ranges: must be an array of " +
                        std::to_string(n) + " [lo, hi] pairs");
    if (!jn.is_array() || jn.size() != n)
      throw SchemaError("samples.grid.counts: must be an array of " +
                        std::to_string(n) + " positive integers");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string wr = "samples.grid.ranges[" + std::to_string(i) + "]";
      if (!jr[i].is_array() || jr[i].size() != 2)
        throw SchemaError(wr + ": must be a [lo, hi] pair");
      const double lo = require_number(jr[i][0], wr + "[0]");
      const double hi = require_number(jr[i][1], wr + "[1]");
      const std::string wc = "samples.grid.counts[" + std::to_string(i) + "]";
      const std::size_t count = require_uint(jn[i], wc);
      if (count == 0) throw SchemaError(wc + ": must be >= 1");
      if (!(lo <= hi)) throw SchemaError(wr + ": needs lo <= hi");
      if (count >= 2 && !(lo < hi))
        throw SchemaError(wr + ": needs lo < hi when the axis count is > 1");
      if (total > 100000000 / count)
        throw SchemaError("samples.grid: too many grid points (limit 1e8)");
      total *= count;
      chart.grid_.ranges.emplace_back(lo, hi);
      chart.grid_.counts.push_back(count);
    }
  } else {
    const json& jp = js.at("points");
    if (!jp.is_array() || jp.empty())
      throw SchemaError("samples.points: must be a non-empty array");
    for (std::size_t p = 0; p < jp.size(); ++p) {
      const std::string wp = "samples.points[" + std::to_string(p) + "]";
      if (!jp[p].is_array() || jp[p].size() != n)
        throw SchemaError(wp + ": must be an array of " + std::to_string(n) +
                          " numbers");
      std::vector<double> pt(n);
      for (std::size_t i = 0; i < n; ++i)
        pt[i] = require_number(jp[p][i], wp + "[" + std::to_string(i) + "]");
      chart.points_.push_back(std::move(pt));
    }
  }
  return chart;
}

MetricChart MetricChart::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open chart file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::vector<std::vector<double>> MetricChart::sample() const {
  if (!has_grid_) {
    if (points_.empty()) throw SchemaError("samples.points: empty sample set");
    return points_;
  }
  const std::size_t n = dim_;
  std::size_t total = 1;
  for (std::size_t c : grid_.counts) total *= c;
  std::vector<std::vector<double>> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<double> pt(n);
    std::size_t rem = idx;
    for (std::size_t ax = n; ax-- > 0;) {
      const std::size_t c = grid_.counts[ax];
      const std::size_t pos = rem % c;
      rem /= c;
      const double lo = grid_.ranges[ax].first;
      const double hi = grid_.ranges[ax].second;
      if (c == 1)
        pt[ax] = lo;
      else if (pos == c - 1)
        pt[ax] = hi;  // pin endpoints exactly
      else
        pt[ax] = lo + (hi - lo) * (static_cast<double>(pos) /
                                   static_cast<double>(c - 1));
    }
    out.push_back(std::move(pt));
  }
  return out;
}

linalg::Matrix MetricChart::metric_at(const std::vector<double>& point) const {
  const std::size_t n = dim_;
  if (point.size() != n)
    throw ArgumentError("metric_at: point has wrong dimension");
  linalg::Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      g(i, k) = entries_[i * n + k].evaluate(point);
  if (!text_symmetric_) {
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        scale = std::max(scale, std::fabs(g(i, k)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        if (std::fabs(g(i, k) - g(k, i)) > 1e-12 * scale)
          throw ValidationError(
              "metric is not numerically symmetric at a sample point "
              "(entries (" +
              std::to_string(i) + "," + std::to_string(k) + ") differ)");
  }
  // Exact symmetry for the eigensolver.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const double avg = 0.5 * (g(i, k) + g(k, i));
      g(i, k) = avg;
      g(k, i) = avg;
    }
  return g;
}

std::string MetricChart::entry_text(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw RangeError("entry_text: index out of range");
  return entries_[i * dim_ + j].source();
}

namespace {

// Christoffel symbols of the second kind at x, first derivatives of the
// metric by central differences at spacing h.  Layout G[(k*n+i)*n+j].
std::vector<double> christoffel(const MetricChart& chart,
                                const std::vector<double>& x, double h) {
  const std::size_t n = chart.dimension();
  const linalg::Matrix g = chart.metric_at(x);
  const linalg::Matrix gi = linalg::inverse(g);
  std::vector<linalg::Matrix> dg;
  dg.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<double> xp = x, xm = x;
    xp[m] += h;
    xm[m] -= h;
    const linalg::Matrix gp = chart.metric_at(xp);
    const linalg::Matrix gm = chart.metric_at(xm);
    linalg::Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = (gp(i, j) - gm(i, j)) / (2.0 * h);
    dg.push_back(std::move(d));
  }
  std::vector<double> G(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l)
          s += gi(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        G[(k * n + i) * n + j] = 0.5 * s;
      }
  return G;
}

}  // namespace

RiemannTensor curvature_at(const MetricChart& chart,
                           const std::vector<double>& point, double step) {
  const std::size_t n = chart.dimension();
  if (point.size() != n)
    throw ArgumentError("curvature_at: point has wrong dimension");
  if (!(step > 0.0)) throw ArgumentError("curvature_at: step must be > 0");

  if (chart.has_grid()) {
    for (std::size_t ax = 0; ax < n; ++ax) {
      const double lo = chart.grid().ranges[ax].first;
      const double hi = chart.grid().ranges[ax].second;
      const double slack = 1e-12 * std::max(1.0, std::fabs(hi - lo));
      if (point[ax] - 2.0 * step < lo - slack ||
          point[ax] + 2.0 * step > hi + slack)
        throw DomainError(
            "finite-difference stencil leaves the declared range on axis " +
            std::to_string(ax));
    }
  }

  const linalg::Matrix g0 = chart.metric_at(point);
  {
    const linalg::EigenDecomposition eg =
        linalg::jacobi_eigen(g0, 1e-14, 100);
    const double lo = eg.values.front();
    const double hi = eg.values.back();
    if (!(lo > 1e-10))
      throw NumericalError(
          "metric is not positive definite at the point (smallest "
          "eigenvalue " +
          format_double(lo) + ")");
    if (hi / lo > 1e12)
      throw NumericalError("metric is numerically singular at the point "
                           "(condition number " +
                           format_double(hi / lo) + ")");
  }

  const double h = step;
  const std::vector<double> G0 = christoffel(chart, point, h);
  std::vector<std::vector<double>> dG;
  dG.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<double> xp = point, xm = point;
    xp[m] += h;
    xm[m] -= h;
    const std::vector<double> Gp = christoffel(chart, xp, h);
    const std::vector<double> Gm = christoffel(chart, xm, h);
    std::vector<double> d(n * n * n);
    for (std::size_t t = 0; t < d.size(); ++t)
      d[t] = (Gp[t] - Gm[t]) / (2.0 * h);
    dG.push_back(std::move(d));
  }

  const auto gidx = [n](std::size_t k, std::size_t i, std::size_t j) {
    return (k * n + i) * n + j;
  };
  // R^r_{s mu nu} = d_mu G^r_{nu s} - d_nu G^r_{mu s} + G G - G G.
  std::vector<double> up(n * n * n * n, 0.0);
  const auto uidx = [n](std::size_t r, std::size_t s, std::size_t mu,
                        std::size_t nu) {
    return ((r * n + s) * n + mu) * n + nu;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
          double v = dG[mu][gidx(r, nu, s)] - dG[nu][gidx(r, mu, s)];
          for (std::size_t lam = 0; lam < n; ++lam)
            v += G0[gidx(r, mu, lam)] * G0[gidx(lam, nu, s)] -
                 G0[gidx(r, nu, lam)] * G0[gidx(lam, mu, s)];
          up[uidx(r, s, mu, nu)] = v;
        }

  // Lower the first index with the metric at the point.
  std::vector<double> low(n * n * n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
          double v = 0.0;
          for (std::size_t a = 0; a < n; ++a)
            v += g0(r, a) * up[uidx(a, s, mu, nu)];
          low[uidx(r, s, mu, nu)] = v;
        }

  // Push to the metric-orthonormal frame, one index per pass.
  const linalg::Matrix B = linalg::metric_orthonormal_frame(g0);
  std::vector<double> cur = std::move(low);
  for (std::size_t pass = 0; pass < 4; ++pass) {
    std::vector<double> next(n * n * n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            double v = 0.0;
            for (std::size_t i = 0; i < n; ++i)
              v += B(a, i) * cur[((i * n + j) * n + k) * n + l];
            // Cycle so the next pass again contracts the leading index.
            next[((j * n + k) * n + l) * n + a] = v;
          }
    cur = std::move(next);
  }

  // Finite differences respect the algebraic curvature symmetries only up
  // to truncation error; project onto the symmetry class so the tensor
  // invariants hold exactly and first Bianchi remains the live check.
  std::vector<double> comps(n * n * n * n, 0.0);
  const auto at = [n, &cur](std::size_t i, std::size_t j, std::size_t k,
                            std::size_t l) {
    return cur[((i * n + j) * n + k) * n + l];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double anti =
              0.25 * (at(i, j, k, l) - at(j, i, k, l) - at(i, j, l, k) +
                      at(j, i, l, k));
          const double anti_pair =
              0.25 * (at(k, l, i, j) - at(l, k, i, j) - at(k, l, j, i) +
                      at(l, k, j, i));
          comps[((i * n + j) * n + k) * n + l] = 0.5 * (anti + anti_pair);
        }
  return RiemannTensor(n, std::move(comps), 1e-6);
}

std::size_t thread_count_from_env() {
  const char* raw = std::getenv("CURVCONES_THREADS");
  if (raw == nullptr || raw[0] == '\0') return 0;
  std::size_t value = 0;
  for (const char* p = raw; *p; ++p) {
    if (*p < '0' || *p > '9')
      throw ArgumentError(
          "CURVCONES_THREADS must be a non-negative integer, got '" +
          std::string(raw) + "'");
    value = value * 10 + static_cast<std::size_t>(*p - '0');
    if (value > 4096)
      throw ArgumentError("CURVCONES_THREADS is out of range");
  }
  return value;
}

ChartEvaluation evaluate_chart(const MetricChart& chart, double step,
                               std::size_t threads) {
  ChartEvaluation out;
  out.dimension = chart.dimension();
  const std::vector<std::vector<double>> pts = chart.sample();
  out.results.resize(pts.size());

  std::size_t workers = threads;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  workers = std::min<std::size_t>(workers, pts.size());
  if (workers == 0) workers = 1;

  std::atomic<std::size_t> cursor{0};
  std::mutex fatal_mutex;
  std::exception_ptr fatal;

  auto body = [&](std::size_t idx) {
    PointResult& r = out.results[idx];
    r.point = pts[idx];
    try {
      const RiemannTensor tensor = curvature_at(chart, pts[idx], step);
      const CurvatureOperatorMatrix op = assemble_operator(tensor);
      const SpectrumDecomposition dec = eigen_spectrum(op);
      r.ok = true;
      r.spectrum = dec.spectrum.values();
    } catch (const DomainError& ex) {
      r.skip_reason = ex.what();
    } catch (const NumericalError& ex) {
      r.skip_reason = ex.what();
    } catch (const EvalError& ex) {
      r.skip_reason = ex.what();
    } catch (const ValidationError& ex) {
      r.skip_reason = ex.what();
    }
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= pts.size()) return;
      try {
        body(idx);
      } catch (...) {
        std::lock_guard<std::mutex> lk(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);
  return out;
}

}  // namespace curvcones
