// Kahler curvature tensors in a unitary frame, the Kahler curvature operator
// restricted to the holonomy algebra u(n) as a real symmetric n^2 x n^2
// matrix, bisectional curvatures, and the identity linking two-positivity of
// the operator to orthogonal bisectional curvature.
//
// A (1,1)-form is identified with its Hermitian coefficient matrix A; the
// real orthonormal basis lists the n diagonal units E_aa first, then for each
// a < b (lexicographic) the pair (E_ab + E_ba)/sqrt(2), i(E_ab - E_ba)/sqrt(2).
// The operator's quadratic form on coefficient matrices A, B is
// Q(A,B) = sum K(a,b,c,d) A_ab B_cd, which is real and symmetric for
// Hermitian arguments; diagonal entries in the E_aa directions are the
// holomorphic sectional curvatures.
#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "curvcones/errors.hpp"
#include "curvcones/linalg.hpp"
#include "curvcones/riemcurv.hpp"
#include "curvcones/symcone.hpp"

namespace curvcones {

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::complex<double> value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::complex<double> operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::complex<double>> data_;
};

class KahlerCurvatureTensor {
 public:
  // Components K(a,b,c,d) represent the curvature R_{a bbar c dbar} in a
  // unitary frame, 0-based.  Validated symmetries: K(a,b,c,d) = K(c,b,a,d)
  // = K(a,d,c,b) and conj(K(a,b,c,d)) = K(b,a,d,c); residuals measured
  // against tol * max(1, max |K|).
  KahlerCurvatureTensor(std::size_t n,
                        std::vector<std::complex<double>> components,
                        double validation_tol = 1e-10);

  static KahlerCurvatureTensor zero(std::size_t n);
  // Constant holomorphic sectional curvature 2c:
  // K(a,b,c,d) = c * (d_ab d_cd + d_ad d_cb).
  static KahlerCurvatureTensor fubini_study(std::size_t n, double c);

  std::size_t dimension() const { return n_; }
  std::complex<double> at(std::size_t a, std::size_t b, std::size_t c,
                          std::size_t d) const {
    return components_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  const std::vector<std::complex<double>>& components() const {
    return components_;
  }

  struct Residuals {
    double first_pair = 0.0;   // K(a,b,c,d) vs K(c,b,a,d)
    double second_pair = 0.0;  // K(a,b,c,d) vs K(a,d,c,b)
    double hermitian = 0.0;    // K(a,b,c,d) vs conj(K(b,a,d,c))
    double max_component = 0.0;
  };
  Residuals residuals() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> components_;
};

struct KahlerOperatorMatrix {
  std::size_t n = 0;       // complex dimension
  linalg::Matrix entries;  // real symmetric, n^2 x n^2
};

// The real orthonormal Hermitian basis described above, in report order.
std::vector<ComplexMatrix> hermitian_basis(std::size_t n);

// Real quadratic-form pairing of two Hermitian coefficient matrices.
double quadratic_form(const KahlerCurvatureTensor& r, const ComplexMatrix& a,
                      const ComplexMatrix& b);

// Operator matrix in the hermitian_basis order; trace equals the eigenvalue
// total, and the E_aa diagonal entries are holomorphic sectional curvatures.
KahlerOperatorMatrix assemble_kahler_operator(const KahlerCurvatureTensor& r);

// Eigendecomposition with the same residual contract as the Riemannian path.
SpectrumDecomposition kahler_eigen_spectrum(const KahlerOperatorMatrix& m,
                                            double tolerance = 1e-10);

// R_{i ibar j jbar}-type curvature of the frame pair (i,j): holomorphic
// sectional for i = j, orthogonal bisectional otherwise.
double bisectional(const KahlerCurvatureTensor& r, std::size_t i,
                   std::size_t j);

// Both sides of the identity 4 R_{i ibar j jbar} = Q(E_ij + E_ji) +
// Q(i(E_ij - E_ji)); each test form has squared norm 2.  Requires i != j.
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};
IdentitySides orthogonal_bisectional_identity(const KahlerCurvatureTensor& r,
                                              std::size_t i, std::size_t j);

// Components in the rotated unitary frame e'_a = sum_i U(i,a) e_i.
KahlerCurvatureTensor transform_frame(const KahlerCurvatureTensor& r,
                                      const ComplexMatrix& u);

struct ObcReport {
  double min_margin = 0.0;  // min over frames/pairs of 4R - 2(rho1+rho2)
  double rho_pair_sum = 0.0;
  std::size_t frames_checked = 0;
  std::size_t pairs_checked = 0;
  bool holds = false;  // min_margin >= -tolerance
};

// Checks 4 R_{i ibar j jbar} >= 2(rho_1 + rho_2) - tolerance over every
// supplied unitary frame and every pair i != j.  Requires rho_1 + rho_2 >
// tolerance (two-positive operator), else PreconditionError.
ObcReport two_positivity_implies_obc(const KahlerCurvatureTensor& r,
                                     const std::vector<ComplexMatrix>& frames,
                                     double tolerance = 1e-9);

// Haar-ish random unitary matrix via Gram-Schmidt on a complex Gaussian
// sample; deterministic for a given generator state.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

}  // namespace curvcones
