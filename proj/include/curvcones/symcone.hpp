// Elementary symmetric functions, shift thresholds, and membership tests for
// the eigenvalue cones used throughout the toolkit.  All operations are pure
// functions on immutable values and safe for concurrent use.
#pragma once

#include <cstddef>
#include <vector>

#include "curvcones/errors.hpp"
#include "curvcones/geometry.hpp"

namespace curvcones {

// Ordered list of real eigenvalues with a cached total.  Values are sorted
// non-decreasingly at construction (stable, so ties keep their input order).
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double total() const { return total_; }

 private:
  std::vector<double> values_;
  double total_;
};

enum class ShiftKind { Riemannian, Kahler, Explicit };

// A non-negative shift applied to a spectrum as lambda - alpha * T * (1,..,1).
// For the Riemannian and Kahler kinds the value is tied to (dim, k) by the
// threshold formula; Explicit carries a caller-chosen value.
struct ShiftParameter {
  double alpha = 0.0;
  ShiftKind kind = ShiftKind::Explicit;
  std::size_t dim = 0;  // N for Riemannian, complex n for Kahler, 0 otherwise
  std::size_t k = 0;    // shift index, 0 for Explicit
};

// Caller-chosen shift value; alpha must be non-negative.
ShiftParameter explicit_shift(double alpha);

enum class ConeStatus { Interior, Boundary, Outside };

const char* to_string(ConeStatus s);

// Result of testing sigma_1..sigma_j against a tolerance band:
//   Interior  <=> every sigma_i >  tolerance
//   Boundary  <=> every sigma_i >= -tolerance and some sigma_i in the band
//   Outside   otherwise.
struct ConeVerdict {
  ConeStatus status = ConeStatus::Outside;
  std::vector<double> sigmas;  // sigma_1..sigma_j
  double tolerance = 0.0;
};

// sigma_j(values) via the stable one-row recurrence e_j <- e_j + v * e_{j-1}
// (never by subset enumeration); sigma_0 = 1.  Requires 0 <= j <= size.
double elementary_symmetric(const std::vector<double>& values, std::size_t j);

// Threshold alpha_k = 1/N - (1/N) * sqrt(k / ((N-1)(N-k))) where N is
// dim_param for the Riemannian kind and dim_param^2 for the Kahler kind.
// Strictly decreasing in k for fixed N, and exactly 0 at k = N-1.
// Requires 1 <= k <= N-1; dim_param >= 3 (Riemannian) or >= 2 (Kahler).
ShiftParameter shift_threshold(std::size_t dim_param, std::size_t k,
                               ShiftKind kind);

// lambda - alpha * T * (1,...,1) with T the spectrum total.  Order is
// preserved and the shifted total equals (1 - alpha*N) * T.
Spectrum shift(const Spectrum& spectrum, const ShiftParameter& alpha);

// Evaluates sigma_1..sigma_j of the spectrum and classifies against the
// tolerance band.  Requires 1 <= j <= size.
ConeVerdict cone_membership(const Spectrum& spectrum, std::size_t j,
                            double tolerance = 1e-9);

// Sum of the k smallest eigenvalues (equivalently the minimum over all
// k-element subsets).  Requires 1 <= k <= size.
double k_smallest_sum(const Spectrum& spectrum, std::size_t k);

enum class DichotomyResult {
  StrictlyPositiveSum,   // lambda_1 + ... + lambda_k > tolerance
  DegenerateEqualTail,   // first k entries ~ 0, tail constant and >= 0
  Violation,             // neither case: impossible for certified inputs
};

const char* to_string(DichotomyResult r);

// Case analysis for spectra whose shifted version has been certified inside
// the closed 2-positive cone at alpha_k (certification is the caller's
// responsibility, via cone_membership of the shifted spectrum).
// Requires 1 <= k <= size-2.
DichotomyResult dichotomy_check(const Spectrum& spectrum, std::size_t k,
                                double tolerance = 1e-9);

}  // namespace curvcones
