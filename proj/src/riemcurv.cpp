#include "curvcones/riemcurv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvcones {

namespace {

std::string plane_name(std::size_t i, std::size_t j, std::size_t k,
                       std::size_t l) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + "," + std::to_string(l) + ")";
}

}  // namespace

RiemannTensor::RiemannTensor(std::size_t n, std::vector<double> components,
                             double validation_tol)
    : n_(n), components_(std::move(components)) {
  if (n_ < 2) {
    throw DomainError("curvature tensor needs dimension >= 2, got " +
                      std::to_string(n_));
  }
  if (components_.size() != n_ * n_ * n_ * n_) {
    throw ArgumentError("component array has length " +
                        std::to_string(components_.size()) + ", expected " +
                        std::to_string(n_ * n_ * n_ * n_));
  }
  const Residuals res = residuals();
  const double budget = validation_tol * std::max(1.0, res.max_component);
  std::string worst;
  double worst_value = 0.0;
  if (res.antisymmetry > budget) {
    worst = "antisymmetry";
    worst_value = res.antisymmetry;
  }
  if (res.pair_symmetry > budget && res.pair_symmetry > worst_value) {
    worst = "pair symmetry";
    worst_value = res.pair_symmetry;
  }
  if (res.bianchi > budget && res.bianchi > worst_value) {
    worst = "first Bianchi identity";
    worst_value = res.bianchi;
  }
  if (!worst.empty()) {
    throw ValidationError("curvature tensor violates " + worst +
                          ": worst residual " + std::to_string(worst_value) +
                          " exceeds budget " + std::to_string(budget));
  }
}

RiemannTensor RiemannTensor::zero(std::size_t n) {
  return RiemannTensor(n, std::vector<double>(n * n * n * n, 0.0));
}

RiemannTensor RiemannTensor::constant_curvature(std::size_t n, double sec) {
  std::vector<double> c(n * n * n * n, 0.0);
  auto idx = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const double dik = (i == k) ? 1.0 : 0.0;
          const double djl = (j == l) ? 1.0 : 0.0;
          const double dil = (i == l) ? 1.0 : 0.0;
          const double djk = (j == k) ? 1.0 : 0.0;
          c[idx(i, j, k, l)] = sec * (dik * djl - dil * djk);
        }
      }
    }
  }
  return RiemannTensor(n, std::move(c));
}

RiemannTensor::Residuals RiemannTensor::residuals() const {
  Residuals res;
  for (double v : components_) {
    res.max_component = std::max(res.max_component, std::fabs(v));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t l = 0; l < n_; ++l) {
          const double r = at(i, j, k, l);
          res.antisymmetry =
              std::max(res.antisymmetry, std::fabs(r + at(j, i, k, l)));
          res.antisymmetry =
              std::max(res.antisymmetry, std::fabs(r + at(i, j, l, k)));
          res.pair_symmetry =
              std::max(res.pair_symmetry, std::fabs(r - at(k, l, i, j)));
          res.bianchi = std::max(
              res.bianchi, std::fabs(r + at(i, k, l, j) + at(i, l, j, k)));
        }
      }
    }
  }
  return res;
}

std::size_t CurvatureOperatorMatrix::pair_index(std::size_t i,
                                                std::size_t j) const {
  if (i >= j || j >= n) {
    throw RangeError("pair index requires i < j < n, got " + plane_name(i, j, 0, 0));
  }
  // Lexicographic position of (i,j) among {(a,b) : a < b}.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> CurvatureOperatorMatrix::plane(
    std::size_t a) const {
  if (a >= N) {
    throw RangeError("two-form index " + std::to_string(a) + " outside [0, " +
                     std::to_string(N) + ")");
  }
  std::size_t i = 0;
  std::size_t row_len = n - 1;
  std::size_t rest = a;
  while (rest >= row_len) {
    rest -= row_len;
    --row_len;
    ++i;
  }
  return {i, i + 1 + rest};
}

CurvatureOperatorMatrix assemble_operator(const RiemannTensor& r) {
  const std::size_t n = r.dimension();
  CurvatureOperatorMatrix op;
  op.n = n;
  op.N = n * (n - 1) / 2;
  op.entries = linalg::Matrix(op.N, op.N, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t a = op.pair_index(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          const std::size_t b = op.pair_index(k, l);
          op.entries(a, b) = r.at(i, j, k, l);
        }
      }
    }
  }
  // Symmetrize exactly: pair symmetry already holds to validation tolerance,
  // and the eigensolver wants a bitwise-symmetric matrix.
  for (std::size_t a = 0; a < op.N; ++a) {
    for (std::size_t b = a + 1; b < op.N; ++b) {
      const double avg = 0.5 * (op.entries(a, b) + op.entries(b, a));
      op.entries(a, b) = avg;
      op.entries(b, a) = avg;
    }
  }
  return op;
}

SpectrumDecomposition eigen_spectrum(const CurvatureOperatorMatrix& m,
                                     double tolerance) {
  linalg::EigenDecomposition eig = linalg::jacobi_eigen(m.entries);
  const std::size_t N = m.N;
  const double scale = std::max(1.0, m.entries.frobenius_norm());
  // Residual check per pair.
  for (std::size_t j = 0; j < N; ++j) {
    double norm2 = 0.0;
    double residual2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      double mv = 0.0;
      for (std::size_t k = 0; k < N; ++k) {
        mv += m.entries(i, k) * eig.vectors(k, j);
      }
      const double r = mv - eig.values[j] * eig.vectors(i, j);
      residual2 += r * r;
      norm2 += eig.vectors(i, j) * eig.vectors(i, j);
    }
    if (std::sqrt(residual2) > tolerance * scale) {
      throw NumericalError("eigenpair " + std::to_string(j) +
                           " residual " + std::to_string(std::sqrt(residual2)) +
                           " exceeds " + std::to_string(tolerance * scale));
    }
    if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-10) {
      throw NumericalError("eigenvector " + std::to_string(j) +
                           " is not unit length");
    }
  }
  // Orthogonality check.
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        dot += eig.vectors(i, a) * eig.vectors(i, b);
      }
      if (std::fabs(dot) > 1e-10) {
        throw NumericalError("eigenvectors " + std::to_string(a) + " and " +
                             std::to_string(b) + " are not orthogonal");
      }
    }
  }
  return SpectrumDecomposition{Spectrum(eig.values), eig.vectors};
}

double sectional(const RiemannTensor& r, std::size_t i, std::size_t j) {
  if (i == j) {
    throw ArgumentError("sectional curvature needs two distinct directions");
  }
  if (i >= r.dimension() || j >= r.dimension()) {
    throw RangeError("direction index outside [0, " +
                     std::to_string(r.dimension()) + ")");
  }
  return r.at(i, j, i, j);
}

linalg::Matrix ricci(const RiemannTensor& r) {
  const std::size_t n = r.dimension();
  linalg::Matrix ric(n, n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sum += r.at(i, j, i, l);
      }
      ric(j, l) = sum;
    }
  }
  return ric;
}

double scalar(const RiemannTensor& r) {
  const linalg::Matrix ric = ricci(r);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.dimension(); ++i) sum += ric(i, i);
  return sum;
}

std::vector<double> kernel_coefficients(const CurvatureOperatorMatrix& m,
                                        std::size_t kernel_dim,
                                        double tolerance) {
  if (kernel_dim > m.N) {
    throw RangeError("kernel dimension " + std::to_string(kernel_dim) +
                     " exceeds operator size " + std::to_string(m.N));
  }
  const SpectrumDecomposition dec = eigen_spectrum(m);
  for (std::size_t a = 0; a < kernel_dim; ++a) {
    if (std::fabs(dec.spectrum[a]) > tolerance) {
      throw ConsistencyError(
          "declared kernel dimension " + std::to_string(kernel_dim) +
          " but eigenvalue " + std::to_string(a) + " is " +
          std::to_string(dec.spectrum[a]));
    }
  }
  // With orthonormal eigenvectors w_a, the expansion coefficient of the
  // basis two-form number p is just the matrix entry vectors(p, a).
  std::vector<double> out(m.N, 0.0);
  for (std::size_t p = 0; p < m.N; ++p) {
    double sum = 0.0;
    for (std::size_t a = 0; a < kernel_dim; ++a) {
      sum += dec.vectors(p, a) * dec.vectors(p, a);
    }
    out[p] = sum;
  }
  return out;
}

}  // namespace curvcones
