#include "curvcones/lemmalab.hpp"

#include <cmath>

#include "curvcones/errors.hpp"
#include "curvcones/numfmt.hpp"

namespace curvcones {

InterpolationProblem InterpolationProblem::create(const Spectrum& spectrum,
                                                  std::size_t k) {
  const std::size_t N = spectrum.size();
  if (N < 3) throw RangeError("interpolation problem needs N >= 3");
  if (k < 1 || k > N - 2)
    throw RangeError("interpolation problem needs 1 <= k <= N-2, got k=" +
                     std::to_string(k));
  const double total = spectrum.total();
  if (!(total > 0.0))
    throw DomainError(
        "interpolation problem needs a positive eigenvalue total, got " +
        format_double(total));

  InterpolationProblem p;
  p.k_ = k;
  const double scale = static_cast<double>(N - k) / total;
  p.lambda_.reserve(N);
  for (double v : spectrum.values()) p.lambda_.push_back(v * scale);

  const ShiftParameter alpha = shift_threshold(N, k, ShiftKind::Riemannian);
  p.alpha_ = alpha.alpha;
  // Normalized total is exactly N - k.
  const double shift_amount = alpha.alpha * static_cast<double>(N - k);
  p.shifted_.reserve(N);
  for (double v : p.lambda_) p.shifted_.push_back(v - shift_amount);

  const double a = -shift_amount;
  const double b = a + 1.0;
  p.a0_.assign(N, b);
  for (std::size_t i = 0; i < k; ++i) p.a0_[i] = a;
  return p;
}

double f_value(const InterpolationProblem& problem, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw RangeError("f_value: t must lie in [0, 1], got " +
                     format_double(t));
  const std::size_t N = problem.size();
  std::vector<double> combo(N);
  for (std::size_t i = 0; i < N; ++i)
    combo[i] =
        t * problem.shifted()[i] + (1.0 - t) * problem.reference()[i];
  return elementary_symmetric(combo, 2);
}

double f_prime_zero(const InterpolationProblem& problem) {
  double s = 0.0;
  for (std::size_t i = 0; i < problem.k(); ++i) s += problem.lambda()[i];
  return s;
}

double f_double_prime_zero(const InterpolationProblem& problem) {
  const double head = f_prime_zero(problem);
  if (std::fabs(head) > 1e-10)
    throw HypothesisError(
        "f''(0) closed form requires the first k normalized entries to sum "
        "to 0; got " +
        format_double(head));
  double s = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double v = problem.lambda()[i];
    if (i < problem.k())
      s += v * v;
    else
      s += (v - 1.0) * (v - 1.0);
  }
  return -s;
}

double fd_prime_zero(const InterpolationProblem& problem, double h) {
  if (!(h > 0.0 && 2.0 * h <= 1.0))
    throw ArgumentError("fd_prime_zero: need 0 < h <= 1/2");
  const double f0 = f_value(problem, 0.0);
  const double f1 = f_value(problem, h);
  const double f2 = f_value(problem, 2.0 * h);
  return (4.0 * f1 - f2 - 3.0 * f0) / (2.0 * h);
}

double fd_double_prime_zero(const InterpolationProblem& problem, double h) {
  if (!(h > 0.0 && 2.0 * h <= 1.0))
    throw ArgumentError("fd_double_prime_zero: need 0 < h <= 1/2");
  const double f0 = f_value(problem, 0.0);
  const double f1 = f_value(problem, h);
  const double f2 = f_value(problem, 2.0 * h);
  return (f0 - 2.0 * f1 + f2) / (h * h);
}

std::pair<double, double> pinching_bounds(std::size_t n, double a,
                                          Geometry kind) {
  if (kind == Geometry::Riemannian && n < 3)
    throw RangeError("pinching_bounds: Riemannian case needs n >= 3");
  if (kind == Geometry::Kahler && n < 2)
    throw RangeError("pinching_bounds: Kahler case needs n >= 2");
  if (!(a > 0.0)) throw RangeError("pinching_bounds: needs a > 0");
  const double frac = kind == Geometry::Riemannian ? 4.0 : 2.0;
  return {(1.0 - frac / static_cast<double>(n)) * a, a};
}

double einstein_constant(std::size_t n, double a, Geometry kind) {
  if (kind == Geometry::Riemannian && n < 3)
    throw RangeError("einstein_constant: Riemannian case needs n >= 3");
  if (kind == Geometry::Kahler && n < 2)
    throw RangeError("einstein_constant: Kahler case needs n >= 2");
  if (!(a > 0.0)) throw RangeError("einstein_constant: needs a > 0");
  const double dn = static_cast<double>(n);
  if (kind == Geometry::Riemannian) return (dn * dn - dn - 4.0) * a / dn;
  return a * (dn - 2.0 / dn);
}

SplittingBound splitting_bound(std::size_t n, std::size_t m, Geometry kind) {
  if (m < 1 || m + 1 > n)
    throw RangeError("splitting_bound: needs 1 <= m <= n-1");
  SplittingBound out;
  out.product = static_cast<long>(m) * static_cast<long>(n - m);
  const long cap = kind == Geometry::Riemannian ? 2 : 1;
  out.admissible = out.product <= cap;
  return out;
}

}  // namespace curvcones
