// Closed-form catalog of model-space curvature tensors at a point: round
// spheres, flat factors, hyperbolic spaces (negative controls), Fubini-Study
// projective spaces, and products of these.  Homogeneity means one point
// describes the whole space.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "curvcones/geometry.hpp"
#include "curvcones/kahlercurv.hpp"
#include "curvcones/riemcurv.hpp"

namespace curvcones {

struct ModelSpec {
  enum class Family { RoundSphere, Flat, Product, FubiniStudy, Hyperbolic };

  Family family = Family::Flat;
  std::size_t n = 0;     // real dimension; complex dimension for FubiniStudy
  double radius = 1.0;   // RoundSphere only
  std::shared_ptr<const ModelSpec> left, right;  // Product factors

  static ModelSpec round_sphere(std::size_t n, double radius = 1.0);
  static ModelSpec flat(std::size_t n);
  static ModelSpec product(ModelSpec a, ModelSpec b);
  static ModelSpec fubini_study(std::size_t n);
  static ModelSpec hyperbolic(std::size_t n);

  // True when the entry carries a Kahler tensor (Fubini-Study factors).
  bool kahler() const;
  // Real dimension for Riemannian entries, complex dimension for Kahler ones.
  std::size_t dimension() const;
  std::string describe() const;
};

struct ModelBuild {
  std::optional<RiemannTensor> riemann;
  std::optional<KahlerCurvatureTensor> kahler;
};

// Constant-curvature factors use sec = 1/radius^2; products assemble block
// tensors with vanishing mixed components.  Fubini-Study entries produce the
// Kahler tensor (normalization c = 1, holomorphic sectional 2); the complex
// projective plane additionally carries its stored real four-dimensional
// curvature tensor.
ModelBuild build(const ModelSpec& spec);

// Maximal number of positive eigenvalues for the curvature operator of a
// product with factor dimensions (m, n-m): n(n-1)/2 - m(n-m) in the
// Riemannian reading and n^2 - 2m(n-m) in the Kahler one.
long positive_eigenvalue_budget(std::size_t n, std::size_t m, Geometry kind);

// CLI-visible identifiers: s3, s2xs1, sKxs1:k, flat:n, cpn:n, cp1xcp1,
// hyperbolic:n.  Unknown ids raise DomainError.
ModelSpec parse_model_id(const std::string& id);

// Stored 6x6 curvature operator of the complex projective plane with real
// sectional curvatures in [1/2, 2]; eigenvalues (0, 0, 1, 1, 1, 3).
const linalg::Matrix& cp2_operator();

// The matching real curvature tensor: the constant-curvature form blended
// with the standard parallel two-form of the complex structure.
RiemannTensor cp2_tensor();

}  // namespace curvcones
