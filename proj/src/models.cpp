#include "curvcones/models.hpp"

#include <utility>

#include "curvcones/errors.hpp"

namespace curvcones {

namespace {

// Flat component array of the Riemann tensor for one model factor.
struct RiemBlock {
  std::size_t n = 0;
  std::vector<double> comps;  // n^4, row-major (((i*n+j)*n+k)*n+l)

  double& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return comps[((i * n + j) * n + k) * n + l];
  }
  double get(std::size_t i, std::size_t j, std::size_t k,
             std::size_t l) const {
    return comps[((i * n + j) * n + k) * n + l];
  }
};

RiemBlock constant_block(std::size_t n, double sec) {
  RiemBlock b;
  b.n = n;
  b.comps.assign(n * n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double dik = (i == k) ? 1.0 : 0.0;
          const double djl = (j == l) ? 1.0 : 0.0;
          const double dil = (i == l) ? 1.0 : 0.0;
          const double djk = (j == k) ? 1.0 : 0.0;
          b.at(i, j, k, l) = sec * (dik * djl - dil * djk);
        }
  return b;
}

RiemBlock riem_block(const ModelSpec& spec) {
  switch (spec.family) {
    case ModelSpec::Family::RoundSphere:
      return constant_block(spec.n, 1.0 / (spec.radius * spec.radius));
    case ModelSpec::Family::Flat: {
      RiemBlock b;
      b.n = spec.n;
      b.comps.assign(spec.n * spec.n * spec.n * spec.n, 0.0);
      return b;
    }
    case ModelSpec::Family::Hyperbolic:
      return constant_block(spec.n, -1.0);
    case ModelSpec::Family::Product: {
      const RiemBlock a = riem_block(*spec.left);
      const RiemBlock c = riem_block(*spec.right);
      RiemBlock b;
      b.n = a.n + c.n;
      b.comps.assign(b.n * b.n * b.n * b.n, 0.0);
      // Mixed components vanish: the factors are totally geodesic.
      for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
          for (std::size_t k = 0; k < a.n; ++k)
            for (std::size_t l = 0; l < a.n; ++l)
              b.at(i, j, k, l) = a.get(i, j, k, l);
      for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
          for (std::size_t k = 0; k < c.n; ++k)
            for (std::size_t l = 0; l < c.n; ++l)
              b.at(a.n + i, a.n + j, a.n + k, a.n + l) = c.get(i, j, k, l);
      return b;
    }
    case ModelSpec::Family::FubiniStudy:
      break;
  }
  throw ArgumentError("riem_block: entry is not Riemannian");
}

// Complex-dimension counterpart for Kahler entries.
struct KahlerBlock {
  std::size_t n = 0;
  std::vector<std::complex<double>> comps;  // n^4

  std::complex<double>& at(std::size_t a, std::size_t b, std::size_t c,
                           std::size_t d) {
    return comps[((a * n + b) * n + c) * n + d];
  }
  std::complex<double> get(std::size_t a, std::size_t b, std::size_t c,
                           std::size_t d) const {
    return comps[((a * n + b) * n + c) * n + d];
  }
};

KahlerBlock kahler_block(const ModelSpec& spec) {
  switch (spec.family) {
    case ModelSpec::Family::FubiniStudy: {
      KahlerBlock b;
      b.n = spec.n;
      b.comps.assign(spec.n * spec.n * spec.n * spec.n, 0.0);
      for (std::size_t a = 0; a < spec.n; ++a)
        for (std::size_t c = 0; c < spec.n; ++c)
          for (std::size_t d = 0; d < spec.n; ++d)
            for (std::size_t e = 0; e < spec.n; ++e) {
              const double dac = (a == c) ? 1.0 : 0.0;
              const double dde = (d == e) ? 1.0 : 0.0;
              const double dae = (a == e) ? 1.0 : 0.0;
              const double ddc = (d == c) ? 1.0 : 0.0;
              b.at(a, c, d, e) = dac * dde + dae * ddc;
            }
      return b;
    }
    case ModelSpec::Family::Product: {
      const KahlerBlock a = kahler_block(*spec.left);
      const KahlerBlock c = kahler_block(*spec.right);
      KahlerBlock b;
      b.n = a.n + c.n;
      b.comps.assign(b.n * b.n * b.n * b.n, 0.0);
      for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
          for (std::size_t k = 0; k < a.n; ++k)
            for (std::size_t l = 0; l < a.n; ++l)
              b.at(i, j, k, l) = a.get(i, j, k, l);
      for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
          for (std::size_t k = 0; k < c.n; ++k)
            for (std::size_t l = 0; l < c.n; ++l)
              b.at(a.n + i, a.n + j, a.n + k, a.n + l) = c.get(i, j, k, l);
      return b;
    }
    default:
      break;
  }
  throw ArgumentError("kahler_block: entry is not Kahler");
}

std::size_t parse_count(const std::string& text, const std::string& id) {
  if (text.empty())
    throw DomainError("model id '" + id + "': missing numeric parameter");
  std::size_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw DomainError("model id '" + id + "': parameter '" + text +
                        "' is not a non-negative integer");
    value = value * 10 + static_cast<std::size_t>(ch - '0');
    if (value > 1000)
      throw DomainError("model id '" + id + "': parameter out of range");
  }
  return value;
}

}  // namespace

ModelSpec ModelSpec::round_sphere(std::size_t n, double radius) {
  if (n < 1) throw DomainError("round_sphere: dimension must be >= 1");
  if (!(radius > 0.0)) throw ArgumentError("round_sphere: radius must be > 0");
  ModelSpec s;
  s.family = Family::RoundSphere;
  s.n = n;
  s.radius = radius;
  return s;
}

ModelSpec ModelSpec::flat(std::size_t n) {
  if (n < 1) throw DomainError("flat: dimension must be >= 1");
  ModelSpec s;
  s.family = Family::Flat;
  s.n = n;
  return s;
}

ModelSpec ModelSpec::product(ModelSpec a, ModelSpec b) {
  if (a.kahler() != b.kahler())
    throw ArgumentError(
        "product: cannot mix Kahler and Riemannian factors in one entry");
  ModelSpec s;
  s.family = Family::Product;
  s.left = std::make_shared<const ModelSpec>(std::move(a));
  s.right = std::make_shared<const ModelSpec>(std::move(b));
  s.n = s.left->dimension() + s.right->dimension();
  return s;
}

ModelSpec ModelSpec::fubini_study(std::size_t n) {
  if (n < 1) throw DomainError("fubini_study: complex dimension must be >= 1");
  ModelSpec s;
  s.family = Family::FubiniStudy;
  s.n = n;
  return s;
}

ModelSpec ModelSpec::hyperbolic(std::size_t n) {
  if (n < 2) throw DomainError("hyperbolic: dimension must be >= 2");
  ModelSpec s;
  s.family = Family::Hyperbolic;
  s.n = n;
  return s;
}

bool ModelSpec::kahler() const {
  switch (family) {
    case Family::FubiniStudy:
      return true;
    case Family::Product:
      return left->kahler() && right->kahler();
    default:
      return false;
  }
}

std::size_t ModelSpec::dimension() const { return n; }

std::string ModelSpec::describe() const {
  switch (family) {
    case Family::RoundSphere: {
      std::string s = "round sphere S^" + std::to_string(n);
      if (radius != 1.0) s += " (radius != 1)";
      return s;
    }
    case Family::Flat:
      return "flat factor of dimension " + std::to_string(n);
    case Family::Hyperbolic:
      return "hyperbolic space H^" + std::to_string(n);
    case Family::FubiniStudy:
      return "Fubini-Study CP^" + std::to_string(n);
    case Family::Product:
      return left->describe() + " x " + right->describe();
  }
  return "unknown";
}

ModelBuild build(const ModelSpec& spec) {
  ModelBuild out;
  if (spec.kahler()) {
    KahlerBlock b = kahler_block(spec);
    out.kahler = KahlerCurvatureTensor(b.n, std::move(b.comps));
    // CP^2 also carries its real curvature tensor.
    if (spec.family == ModelSpec::Family::FubiniStudy && spec.n == 2)
      out.riemann = cp2_tensor();
  } else {
    RiemBlock b = riem_block(spec);
    out.riemann = RiemannTensor(b.n, std::move(b.comps));
  }
  return out;
}

long positive_eigenvalue_budget(std::size_t n, std::size_t m, Geometry kind) {
  if (m < 1 || m + 1 > n)
    throw RangeError("positive_eigenvalue_budget: need 1 <= m <= n-1");
  const long ln = static_cast<long>(n);
  const long lm = static_cast<long>(m);
  const long cross = lm * (ln - lm);
  if (kind == Geometry::Riemannian) return ln * (ln - 1) / 2 - cross;
  return ln * ln - 2 * cross;
}

ModelSpec parse_model_id(const std::string& id) {
  if (id == "s3") return ModelSpec::round_sphere(3);
  if (id == "s2xs1")
    return ModelSpec::product(ModelSpec::round_sphere(2), ModelSpec::flat(1));
  if (id == "cp1xcp1")
    return ModelSpec::product(ModelSpec::fubini_study(1),
                              ModelSpec::fubini_study(1));
  const auto colon = id.find(':');
  if (colon != std::string::npos) {
    const std::string head = id.substr(0, colon);
    const std::string tail = id.substr(colon + 1);
    if (head == "sKxs1") {
      const std::size_t k = parse_count(tail, id);
      if (k < 2)
        throw DomainError("model id '" + id + "': sphere factor needs k >= 2");
      return ModelSpec::product(ModelSpec::round_sphere(k),
                                ModelSpec::flat(1));
    }
    if (head == "flat") {
      const std::size_t n = parse_count(tail, id);
      if (n < 2)
        throw DomainError("model id '" + id + "': flat model needs n >= 2");
      return ModelSpec::flat(n);
    }
    if (head == "cpn") {
      const std::size_t n = parse_count(tail, id);
      if (n < 1)
        throw DomainError("model id '" + id + "': need complex dimension >= 1");
      return ModelSpec::fubini_study(n);
    }
    if (head == "hyperbolic") {
      const std::size_t n = parse_count(tail, id);
      return ModelSpec::hyperbolic(n);
    }
  }
  throw DomainError("unknown model id '" + id + "'");
}

const linalg::Matrix& cp2_operator() {
  static const linalg::Matrix stored = [] {
    // Plane basis order (01, 02, 03, 12, 13, 23).
    const double rows[6][6] = {
        {2.0, 0.0, 0.0, 0.0, 0.0, 1.0},  //
        {0.0, 0.5, 0.0, 0.0, 0.5, 0.0},  //
        {0.0, 0.0, 0.5, -0.5, 0.0, 0.0},  //
        {0.0, 0.0, -0.5, 0.5, 0.0, 0.0},  //
        {0.0, 0.5, 0.0, 0.0, 0.5, 0.0},  //
        {1.0, 0.0, 0.0, 0.0, 0.0, 2.0}};
    linalg::Matrix m(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = rows[r][c];
    return m;
  }();
  return stored;
}

RiemannTensor cp2_tensor() {
  // Standard parallel two-form on R^4 = C^2.
  double w[4][4] = {};
  w[0][1] = 1.0;
  w[1][0] = -1.0;
  w[2][3] = 1.0;
  w[3][2] = -1.0;
  const std::size_t n = 4;
  std::vector<double> comps(n * n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double dik = (i == k) ? 1.0 : 0.0;
          const double djl = (j == l) ? 1.0 : 0.0;
          const double dil = (i == l) ? 1.0 : 0.0;
          const double djk = (j == k) ? 1.0 : 0.0;
          const double val = (dik * djl - dil * djk) +
                             (w[i][k] * w[j][l] - w[i][l] * w[j][k]) +
                             2.0 * w[i][j] * w[k][l];
          comps[((i * n + j) * n + k) * n + l] = 0.5 * val;
        }
  return RiemannTensor(n, std::move(comps));
}

}  // namespace curvcones
