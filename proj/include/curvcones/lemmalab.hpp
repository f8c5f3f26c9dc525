// Numerical verification of the proof machinery behind the shifted-cone
// results: the quadratic interpolation function f(t) between a spectrum and
// its two-block reference point, its derivatives at 0 in closed form and by
// finite differences, and the pinching / Einstein-constant / splitting
// arithmetic used by the rigidity arguments.
#pragma once

#include <cstddef>
#include <vector>

#include "curvcones/geometry.hpp"
#include "curvcones/symcone.hpp"

namespace curvcones {

// A spectrum rescaled so its total is exactly T = N - k, together with the
// two-block reference point A0 = (a,...,a, b,...,b), a = -alpha_k * (N-k),
// b = a + 1, which sits exactly on the sigma_2 = 0 boundary and shares its
// sigma_1 with the shifted spectrum.
class InterpolationProblem {
 public:
  // Rescales `spectrum` by (N-k)/total; totals <= 0 are rejected with
  // DomainError (the zero-total case is handled by the cone tests alone).
  // Requires 1 <= k <= N-2.
  static InterpolationProblem create(const Spectrum& spectrum, std::size_t k);

  std::size_t size() const { return lambda_.size(); }
  std::size_t k() const { return k_; }
  const std::vector<double>& lambda() const { return lambda_; }   // normalized
  const std::vector<double>& shifted() const { return shifted_; } // at alpha_k
  const std::vector<double>& reference() const { return a0_; }    // A0
  double alpha() const { return alpha_; }

 private:
  std::vector<double> lambda_, shifted_, a0_;
  std::size_t k_ = 0;
  double alpha_ = 0.0;
};

// sigma_2 of the convex combination t * shifted + (1-t) * A0.  The path is
// an exact quadratic in t and f(0) = 0 up to roundoff.  Requires t in [0,1].
double f_value(const InterpolationProblem& problem, double t);

// Closed form f'(0) = lambda_1 + ... + lambda_k (normalized entries).
double f_prime_zero(const InterpolationProblem& problem);

// Closed form f''(0) = -sum_{i<=k} lambda_i^2 - sum_{j>k} (lambda_j - 1)^2.
// The quoted form is stated under sum_{i<=k} lambda_i = 0; requesting it
// when |sum| > 1e-10 raises HypothesisError.
double f_double_prime_zero(const InterpolationProblem& problem);

// One-sided-safe finite differences staying inside [0, 1]:
// f'(0) ~ (4f(h) - f(2h) - 3f(0)) / (2h), exact on quadratics;
// f''(0) ~ (f(0) - 2f(h) + f(2h)) / h^2, exact on quadratics.
double fd_prime_zero(const InterpolationProblem& problem, double h = 1e-4);
double fd_double_prime_zero(const InterpolationProblem& problem,
                            double h = 1e-4);

// Sectional-curvature pinching interval for the rescaled limit metric:
// ((1 - 4/n) a, a) in the Riemannian case (n >= 3), ((1 - 2/n) a, a) for
// the holomorphic bisectional range in the Kahler case (n >= 2); a > 0.
std::pair<double, double> pinching_bounds(std::size_t n, double a,
                                          Geometry kind);

// Einstein constant of the pinched limit: (n^2 - n - 4) a / n = a(n-1-4/n)
// Riemannian, a(n - 2/n) Kahler.
double einstein_constant(std::size_t n, double a, Geometry kind);

struct SplittingBound {
  long product = 0;     // m(n-m)
  bool admissible = false;
};

// Whether an m x (n-m) local splitting fits the degenerate two-dimensional
// kernel: m(n-m) <= 2 in the Riemannian case, <= 1 in the Kahler case.
// Requires 1 <= m <= n-1.
SplittingBound splitting_bound(std::size_t n, std::size_t m, Geometry kind);

}  // namespace curvcones
