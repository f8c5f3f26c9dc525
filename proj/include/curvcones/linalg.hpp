// Small dense real matrices plus the handful of factorizations the toolkit
// needs: a cyclic Jacobi eigensolver for symmetric matrices, Gauss-Jordan
// inversion, and metric Gram-Schmidt orthonormalization.  Operator sizes stay
// tiny (N <= 45 for the geometries in scope), so dense iteration is ample.
#pragma once

#include <cstddef>
#include <vector>

#include "curvcones/errors.hpp"

namespace curvcones::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  double frobenius_norm() const;
  double max_abs() const;
  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j]
};

// Cyclic Jacobi rotations on a symmetric matrix.  Converged when the
// off-diagonal Frobenius norm drops below off_threshold * max(1, |M|_F);
// exceeding max_sweeps raises NumericalError with the residual.
EigenDecomposition jacobi_eigen(const Matrix& m, double off_threshold = 1e-12,
                                int max_sweeps = 100);

// Gauss-Jordan inverse with partial pivoting; NumericalError when a pivot
// collapses (numerically singular input).
Matrix inverse(const Matrix& m);

// Rows of the result form a g-orthonormal frame obtained by Gram-Schmidt on
// the coordinate frame, in coordinate order (deterministic).  Requires g
// symmetric positive definite; NumericalError otherwise.
Matrix metric_orthonormal_frame(const Matrix& g);

}  // namespace curvcones::linalg
