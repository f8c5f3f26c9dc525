#include "curvcones/symcone.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace curvcones {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw ValidationError("spectrum must contain at least one eigenvalue");
  }
  std::stable_sort(values_.begin(), values_.end());
  total_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

ShiftParameter explicit_shift(double alpha) {
  if (!(alpha >= 0.0)) {
    throw ArgumentError("shift parameter must be non-negative, got " +
                        std::to_string(alpha));
  }
  return ShiftParameter{alpha, ShiftKind::Explicit, 0, 0};
}

const char* to_string(ConeStatus s) {
  switch (s) {
    case ConeStatus::Interior: return "interior";
    case ConeStatus::Boundary: return "boundary";
    case ConeStatus::Outside: return "outside";
  }
  return "unknown";
}

const char* to_string(DichotomyResult r) {
  switch (r) {
    case DichotomyResult::StrictlyPositiveSum: return "strictly-positive-sum";
    case DichotomyResult::DegenerateEqualTail: return "degenerate-equal-tail";
    case DichotomyResult::Violation: return "violation";
  }
  return "unknown";
}

double elementary_symmetric(const std::vector<double>& values, std::size_t j) {
  if (j > values.size()) {
    throw RangeError("elementary symmetric index " + std::to_string(j) +
                     " exceeds vector length " + std::to_string(values.size()));
  }
  // One-row recurrence: after processing each value v, e[i] holds sigma_i of
  // the prefix.  Updating from the top keeps each e[i] free of v's own term.
  std::vector<double> e(j + 1, 0.0);
  e[0] = 1.0;
  for (double v : values) {
    for (std::size_t i = j; i >= 1; --i) {
      e[i] += v * e[i - 1];
    }
  }
  return e[j];
}

ShiftParameter shift_threshold(std::size_t dim_param, std::size_t k,
                               ShiftKind kind) {
  std::size_t big_n = 0;
  switch (kind) {
    case ShiftKind::Riemannian:
      if (dim_param < 3) {
        throw DomainError("riemannian shift threshold requires N >= 3, got " +
                          std::to_string(dim_param));
      }
      big_n = dim_param;
      break;
    case ShiftKind::Kahler:
      if (dim_param < 2) {
        throw DomainError("kahler shift threshold requires n >= 2, got " +
                          std::to_string(dim_param));
      }
      big_n = dim_param * dim_param;
      break;
    case ShiftKind::Explicit:
      throw ArgumentError("shift_threshold needs a riemannian or kahler kind");
  }
  if (k < 1 || k > big_n - 1) {
    throw RangeError("shift index k = " + std::to_string(k) +
                     " outside [1, " + std::to_string(big_n - 1) + "]");
  }
  const double n = static_cast<double>(big_n);
  const double kk = static_cast<double>(k);
  const double alpha =
      (1.0 - std::sqrt(kk / ((n - 1.0) * (n - kk)))) / n;
  return ShiftParameter{alpha, kind, dim_param, k};
}

Spectrum shift(const Spectrum& spectrum, const ShiftParameter& alpha) {
  const double offset = alpha.alpha * spectrum.total();
  std::vector<double> shifted(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    shifted[i] = spectrum[i] - offset;
  }
  return Spectrum(std::move(shifted));
}

ConeVerdict cone_membership(const Spectrum& spectrum, std::size_t j,
                            double tolerance) {
  if (j < 1 || j > spectrum.size()) {
    throw RangeError("cone index j = " + std::to_string(j) + " outside [1, " +
                     std::to_string(spectrum.size()) + "]");
  }
  if (!(tolerance > 0.0)) {
    throw ArgumentError("cone tolerance must be positive");
  }
  ConeVerdict verdict;
  verdict.tolerance = tolerance;
  verdict.sigmas.reserve(j);
  for (std::size_t i = 1; i <= j; ++i) {
    verdict.sigmas.push_back(elementary_symmetric(spectrum.values(), i));
  }
  bool all_interior = true;
  bool all_nonnegative = true;
  for (double s : verdict.sigmas) {
    all_interior = all_interior && (s > tolerance);
    all_nonnegative = all_nonnegative && (s >= -tolerance);
  }
  if (all_interior) {
    verdict.status = ConeStatus::Interior;
  } else if (all_nonnegative) {
    // Not all sigmas exceed +tolerance, so at least one sits in the band.
    verdict.status = ConeStatus::Boundary;
  } else {
    verdict.status = ConeStatus::Outside;
  }
  return verdict;
}

double k_smallest_sum(const Spectrum& spectrum, std::size_t k) {
  if (k < 1 || k > spectrum.size()) {
    throw RangeError("k = " + std::to_string(k) + " outside [1, " +
                     std::to_string(spectrum.size()) + "]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += spectrum[i];
  }
  return sum;
}

DichotomyResult dichotomy_check(const Spectrum& spectrum, std::size_t k,
                                double tolerance) {
  const std::size_t n = spectrum.size();
  if (k < 1 || n < 3 || k > n - 2) {
    throw RangeError("dichotomy index k = " + std::to_string(k) +
                     " outside [1, " + std::to_string(n >= 3 ? n - 2 : 0) +
                     "]");
  }
  if (k_smallest_sum(spectrum, k) > tolerance) {
    return DichotomyResult::StrictlyPositiveSum;
  }
  bool head_zero = true;
  for (std::size_t i = 0; i < k; ++i) {
    head_zero = head_zero && std::fabs(spectrum[i]) <= tolerance;
  }
  const double tail_min = spectrum[k];      // sorted order
  const double tail_max = spectrum[n - 1];
  const bool tail_constant = (tail_max - tail_min) <= tolerance;
  const bool tail_nonnegative = tail_min >= -tolerance;
  if (head_zero && tail_constant && tail_nonnegative) {
    return DichotomyResult::DegenerateEqualTail;
  }
  return DichotomyResult::Violation;
}

}  // namespace curvcones
