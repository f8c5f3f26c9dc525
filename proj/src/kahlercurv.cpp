#include "curvcones/kahlercurv.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace curvcones {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Sparse view of a basis coefficient matrix: at most two non-zero entries.
struct SparseForm {
  std::size_t count = 0;
  std::size_t row[2] = {0, 0};
  std::size_t col[2] = {0, 0};
  std::complex<double> val[2] = {0.0, 0.0};
};

SparseForm sparsify(const ComplexMatrix& a) {
  SparseForm s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != std::complex<double>(0.0, 0.0)) {
        if (s.count < 2) {
          s.row[s.count] = i;
          s.col[s.count] = j;
          s.val[s.count] = a(i, j);
        }
        ++s.count;
      }
    }
  }
  return s;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

KahlerCurvatureTensor::KahlerCurvatureTensor(
    std::size_t n, std::vector<std::complex<double>> components,
    double validation_tol)
    : n_(n), components_(std::move(components)) {
  if (n_ < 1) {
    throw DomainError("kahler curvature tensor needs dimension >= 1");
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
  if (res.first_pair > budget) {
    worst = "first-pair symmetry";
    worst_value = res.first_pair;
  }
  if (res.second_pair > budget && res.second_pair > worst_value) {
    worst = "second-pair symmetry";
    worst_value = res.second_pair;
  }
  if (res.hermitian > budget && res.hermitian > worst_value) {
    worst = "hermitian symmetry";
    worst_value = res.hermitian;
  }
  if (!worst.empty()) {
    throw ValidationError("kahler curvature tensor violates " + worst +
                          ": worst residual " + std::to_string(worst_value) +
                          " exceeds budget " + std::to_string(budget));
  }
}

KahlerCurvatureTensor KahlerCurvatureTensor::zero(std::size_t n) {
  return KahlerCurvatureTensor(
      n, std::vector<std::complex<double>>(n * n * n * n, 0.0));
}

KahlerCurvatureTensor KahlerCurvatureTensor::fubini_study(std::size_t n,
                                                          double c) {
  std::vector<std::complex<double>> k(n * n * n * n, 0.0);
  auto idx = [n](std::size_t a, std::size_t b, std::size_t cc, std::size_t d) {
    return ((a * n + b) * n + cc) * n + d;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t cc = 0; cc < n; ++cc) {
        for (std::size_t d = 0; d < n; ++d) {
          const double dab = (a == b) ? 1.0 : 0.0;
          const double dcd = (cc == d) ? 1.0 : 0.0;
          const double dad = (a == d) ? 1.0 : 0.0;
          const double dcb = (cc == b) ? 1.0 : 0.0;
          k[idx(a, b, cc, d)] = c * (dab * dcd + dad * dcb);
        }
      }
    }
  }
  return KahlerCurvatureTensor(n, std::move(k));
}

KahlerCurvatureTensor::Residuals KahlerCurvatureTensor::residuals() const {
  Residuals res;
  for (const auto& v : components_) {
    res.max_component = std::max(res.max_component, std::abs(v));
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t d = 0; d < n_; ++d) {
          const std::complex<double> v = at(a, b, c, d);
          res.first_pair =
              std::max(res.first_pair, std::abs(v - at(c, b, a, d)));
          res.second_pair =
              std::max(res.second_pair, std::abs(v - at(a, d, c, b)));
          res.hermitian = std::max(res.hermitian,
                                   std::abs(v - std::conj(at(b, a, d, c))));
        }
      }
    }
  }
  return res;
}

std::vector<ComplexMatrix> hermitian_basis(std::size_t n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    ComplexMatrix e(n, n, 0.0);
    e(a, a) = 1.0;
    basis.push_back(std::move(e));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      ComplexMatrix s(n, n, 0.0);
      s(a, b) = inv_sqrt2;
      s(b, a) = inv_sqrt2;
      basis.push_back(std::move(s));
      ComplexMatrix j(n, n, 0.0);
      j(a, b) = kI * inv_sqrt2;
      j(b, a) = -kI * inv_sqrt2;
      basis.push_back(std::move(j));
    }
  }
  return basis;
}

double quadratic_form(const KahlerCurvatureTensor& r, const ComplexMatrix& a,
                      const ComplexMatrix& b) {
  const std::size_t n = r.dimension();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw ArgumentError("coefficient matrix shape does not match the tensor");
  }
  const SparseForm sa = sparsify(a);
  const SparseForm sb = sparsify(b);
  std::complex<double> sum = 0.0;
  if (sa.count <= 2 && sb.count <= 2) {
    for (std::size_t p = 0; p < sa.count; ++p) {
      for (std::size_t q = 0; q < sb.count; ++q) {
        sum += r.at(sa.row[p], sa.col[p], sb.row[q], sb.col[q]) * sa.val[p] *
               sb.val[q];
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::complex<double> aij = a(i, j);
        if (aij == std::complex<double>(0.0, 0.0)) continue;
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            sum += r.at(i, j, k, l) * aij * b(k, l);
          }
        }
      }
    }
  }
  return sum.real();
}

KahlerOperatorMatrix assemble_kahler_operator(const KahlerCurvatureTensor& r) {
  const std::size_t n = r.dimension();
  const std::vector<ComplexMatrix> basis = hermitian_basis(n);
  const std::size_t m = basis.size();
  KahlerOperatorMatrix op;
  op.n = n;
  op.entries = linalg::Matrix(m, m, 0.0);
  for (std::size_t alpha = 0; alpha < m; ++alpha) {
    for (std::size_t beta = alpha; beta < m; ++beta) {
      const double q = quadratic_form(r, basis[alpha], basis[beta]);
      op.entries(alpha, beta) = q;
      op.entries(beta, alpha) = q;
    }
  }
  return op;
}

SpectrumDecomposition kahler_eigen_spectrum(const KahlerOperatorMatrix& m,
                                            double tolerance) {
  CurvatureOperatorMatrix wrapper;
  wrapper.n = m.n;
  wrapper.N = m.entries.rows();
  wrapper.entries = m.entries;
  return eigen_spectrum(wrapper, tolerance);
}

double bisectional(const KahlerCurvatureTensor& r, std::size_t i,
                   std::size_t j) {
  if (i >= r.dimension() || j >= r.dimension()) {
    throw RangeError("frame index outside [0, " +
                     std::to_string(r.dimension()) + ")");
  }
  return r.at(i, j, j, i).real();
}

IdentitySides orthogonal_bisectional_identity(const KahlerCurvatureTensor& r,
                                              std::size_t i, std::size_t j) {
  if (i == j) {
    throw ArgumentError("orthogonal bisectional identity needs i != j");
  }
  if (i >= r.dimension() || j >= r.dimension()) {
    throw RangeError("frame index outside [0, " +
                     std::to_string(r.dimension()) + ")");
  }
  const std::size_t n = r.dimension();
  ComplexMatrix sym(n, n, 0.0);
  sym(i, j) = 1.0;
  sym(j, i) = 1.0;
  ComplexMatrix antisym(n, n, 0.0);
  antisym(i, j) = kI;
  antisym(j, i) = -kI;
  IdentitySides sides;
  sides.lhs = 4.0 * r.at(i, i, j, j).real();
  sides.rhs = quadratic_form(r, sym, sym) + quadratic_form(r, antisym, antisym);
  return sides;
}

KahlerCurvatureTensor transform_frame(const KahlerCurvatureTensor& r,
                                      const ComplexMatrix& u) {
  const std::size_t n = r.dimension();
  if (u.rows() != n || u.cols() != n) {
    throw ArgumentError("frame matrix shape does not match the tensor");
  }
  auto idx = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return ((a * n + b) * n + c) * n + d;
  };
  // Contract one index per pass: K'(a,b,c,d) =
  // sum U(i,a) conj(U(j,b)) U(k,c) conj(U(l,d)) K(i,j,k,l).
  std::vector<std::complex<double>> cur(r.components());
  std::vector<std::complex<double>> next(cur.size());
  for (int pass = 0; pass < 4; ++pass) {
    std::fill(next.begin(), next.end(), std::complex<double>(0.0, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            std::complex<double> sum = 0.0;
            for (std::size_t s = 0; s < n; ++s) {
              // Rotate the leading index, then cycle so each pass hits the
              // next one: (a,b,c,d) -> (b,c,d,a) ordering below.
              const std::complex<double> factor =
                  (pass % 2 == 0) ? u(s, a) : std::conj(u(s, a));
              sum += factor * cur[idx(s, b, c, d)];
            }
            // Store cycled so four passes transform all four slots.
            next[idx(b, c, d, a)] = sum;
          }
        }
      }
    }
    std::swap(cur, next);
  }
  return KahlerCurvatureTensor(n, std::move(cur), 1e-8);
}

ObcReport two_positivity_implies_obc(const KahlerCurvatureTensor& r,
                                     const std::vector<ComplexMatrix>& frames,
                                     double tolerance) {
  const KahlerOperatorMatrix op = assemble_kahler_operator(r);
  const SpectrumDecomposition dec = kahler_eigen_spectrum(op);
  if (dec.spectrum.size() < 2) {
    throw PreconditionError("operator too small for a two-positivity test");
  }
  const double rho12 = dec.spectrum[0] + dec.spectrum[1];
  if (!(rho12 > tolerance)) {
    throw PreconditionError(
        "two-positivity precondition fails: rho_1 + rho_2 = " +
        std::to_string(rho12));
  }
  ObcReport report;
  report.rho_pair_sum = rho12;
  bool first = true;
  for (const auto& u : frames) {
    const KahlerCurvatureTensor rotated = transform_frame(r, u);
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      for (std::size_t j = i + 1; j < r.dimension(); ++j) {
        const double margin =
            4.0 * rotated.at(i, i, j, j).real() - 2.0 * rho12;
        if (first || margin < report.min_margin) {
          report.min_margin = margin;
          first = false;
        }
        ++report.pairs_checked;
      }
    }
    ++report.frames_checked;
  }
  report.holds = !first && report.min_margin >= -tolerance;
  return report;
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  // Gram-Schmidt on columns.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      std::complex<double> proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        proj += std::conj(m(i, prev)) * m(i, c);
      }
      for (std::size_t i = 0; i < n; ++i) {
        m(i, c) -= proj * m(i, prev);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(m(i, c));
    if (!(norm2 > 1e-12)) {
      throw NumericalError("degenerate sample while drawing a random unitary");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) m(i, c) *= inv;
  }
  return m;
}

}  // namespace curvcones
