// Riemann curvature tensors in an orthonormal frame at a point, assembly of
// the curvature operator on two-forms as a symmetric N x N matrix with
// N = n(n-1)/2, and the derived sectional / Ricci / scalar curvatures.
//
// Sign and index conventions are pinned by one testable anchor: the operator
// diagonal equals sectional curvature, so the unit round sphere assembles to
// the identity matrix.  The two-form basis {e_i ^ e_j : i < j} is declared
// orthonormal (unit norm) and ordered lexicographically; with that
// normalization the scalar curvature equals twice the operator trace.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curvcones/errors.hpp"
#include "curvcones/linalg.hpp"
#include "curvcones/symcone.hpp"

namespace curvcones {

class RiemannTensor {
 public:
  // Components indexed R(i,j,k,l), 0-based, in an orthonormal frame.
  // Validates antisymmetry, pair symmetry and the first Bianchi identity;
  // residuals are measured against tol * max(1, max |component|) and a
  // violation raises ValidationError naming the worst offender.
  RiemannTensor(std::size_t n, std::vector<double> components,
                double validation_tol = 1e-10);

  static RiemannTensor zero(std::size_t n);
  // Constant sectional curvature: R_ijkl = sec * (d_ik d_jl - d_il d_jk).
  static RiemannTensor constant_curvature(std::size_t n, double sec);

  std::size_t dimension() const { return n_; }
  double at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return components_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const std::vector<double>& components() const { return components_; }

  struct Residuals {
    double antisymmetry = 0.0;
    double pair_symmetry = 0.0;
    double bianchi = 0.0;
    double max_component = 0.0;
  };
  Residuals residuals() const;

 private:
  std::size_t n_;
  std::vector<double> components_;
};

// Symmetric operator matrix on the space of two-forms.
struct CurvatureOperatorMatrix {
  std::size_t n = 0;  // manifold dimension
  std::size_t N = 0;  // n(n-1)/2
  linalg::Matrix entries;

  // Lexicographic index of the basis two-form e_i ^ e_j, i < j.
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  // Inverse of pair_index.
  std::pair<std::size_t, std::size_t> plane(std::size_t a) const;
};

// Entry (pair(i,j), pair(k,l)) is R(i,j,k,l); the diagonal is sectional
// curvature and the unit round sphere yields the identity.
CurvatureOperatorMatrix assemble_operator(const RiemannTensor& r);

struct SpectrumDecomposition {
  Spectrum spectrum;       // ascending eigenvalues
  linalg::Matrix vectors;  // orthonormal columns, same order
};

// Full eigendecomposition via the Jacobi solver; every residual
// |Mv - lambda v| must stay below tolerance * max(1, |M|_F), and the
// eigenvector matrix must be orthonormal to 1e-10, else NumericalError.
SpectrumDecomposition eigen_spectrum(const CurvatureOperatorMatrix& m,
                                     double tolerance = 1e-10);

// Sectional curvature of the (e_i, e_j) coordinate plane; i != j.
double sectional(const RiemannTensor& r, std::size_t i, std::size_t j);

// Ricci tensor Ric_jl = sum_i R(i,j,i,l) as a symmetric n x n matrix.
linalg::Matrix ricci(const RiemannTensor& r);

// Scalar curvature; equals 2 * trace(assemble_operator(r)).
double scalar(const RiemannTensor& r);

// For each plane (i,j), the squared projection sum_{a < kernel_dim}
// (c_ij^a)^2 of the basis two-form onto the span of the lowest kernel_dim
// eigenvectors.  Values lie in [0,1].  The lowest kernel_dim eigenvalues
// must be <= tolerance in magnitude, else ConsistencyError.
std::vector<double> kernel_coefficients(const CurvatureOperatorMatrix& m,
                                        std::size_t kernel_dim,
                                        double tolerance = 1e-8);

}  // namespace curvcones
