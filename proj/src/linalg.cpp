#include "curvcones/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace curvcones::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::fabs(v));
  return best;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ArgumentError("matrix product shape mismatch");
  }
  Matrix c(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Matrix& m, double off_threshold,
                                int max_sweeps) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("eigendecomposition requires a square matrix");
  }
  const std::size_t n = m.rows();
  // Symmetry guard: the rotations assume it.
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      asym = std::max(asym, std::fabs(m(i, j) - m(j, i)));
    }
  }
  const double scale = std::max(1.0, m.frobenius_norm());
  if (asym > 1e-10 * scale) {
    throw ArgumentError("eigendecomposition requires a symmetric matrix");
  }

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double threshold = off_threshold * scale;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= threshold / (static_cast<double>(n) * n)) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double apj = a(p, j);
          const double aqj = a(q, j);
          a(p, j) = c * apj - s * aqj;
          a(q, j) = s * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > threshold) {
    throw NumericalError(
        "jacobi eigensolver did not converge after " +
        std::to_string(max_sweeps) + " sweeps; off-diagonal norm " +
        std::to_string(off_diagonal_norm(a)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x) < a(y, y);
  });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors(i, j) = v(i, order[j]);
    }
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("inverse requires a square matrix");
  }
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    }
    if (std::fabs(a(pivot, col)) < 1e-14 * scale) {
      throw NumericalError("matrix is numerically singular (pivot " +
                           std::to_string(a(pivot, col)) + " in column " +
                           std::to_string(col) + ")");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const double d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix metric_orthonormal_frame(const Matrix& g) {
  if (g.rows() != g.cols()) {
    throw ArgumentError("metric must be square");
  }
  const std::size_t n = g.rows();
  auto inner = [&](const std::vector<double>& u, const std::vector<double>& w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sum += u[i] * g(i, j) * w[j];
      }
    }
    return sum;
  };
  Matrix frame(n, n, 0.0);
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<double> v(n, 0.0);
    v[a] = 1.0;
    for (const auto& f : rows) {
      const double proj = inner(v, f);
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * f[i];
    }
    // Re-orthogonalize once; plain Gram-Schmidt loses digits when the metric
    // is ill-conditioned and the frame check below demands 1e-12.
    for (const auto& f : rows) {
      const double proj = inner(v, f);
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * f[i];
    }
    const double norm2 = inner(v, v);
    if (!(norm2 > 0.0)) {
      throw NumericalError(
          "metric is not positive definite under Gram-Schmidt (direction " +
          std::to_string(a) + ")");
    }
    const double inv_norm = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) v[i] *= inv_norm;
    for (std::size_t i = 0; i < n; ++i) frame(a, i) = v[i];
    rows.push_back(std::move(v));
  }
  return frame;
}

}  // namespace curvcones::linalg
