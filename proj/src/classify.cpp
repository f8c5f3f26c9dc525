#include "curvcones/classify.hpp"

#include <cmath>

#include "curvcones/errors.hpp"

namespace curvcones {

namespace {

constexpr const char* kSphereRigidity = "shifted-cone-sphere-rigidity";
constexpr const char* kBoundaryTrichotomy = "shifted-cone-boundary-trichotomy";
constexpr const char* kBettiVanishing = "k-positivity-betti-vanishing";
constexpr const char* kProjectiveRigidity = "shifted-cone-projective-rigidity";
constexpr const char* kKahlerTrichotomy = "kahler-boundary-trichotomy";

std::vector<std::string> base_caveats(const Evidence& e) {
  std::vector<std::string> c;
  c.push_back(
      "sampling-only: finitely many sampled points cannot certify the "
      "everywhere hypothesis");
  c.push_back("compactness: user-asserted, not verified");
  (void)e;
  return c;
}

bool all_interior(const Evidence& e) {
  for (const ConeVerdict& v : e.verdicts())
    if (v.status != ConeStatus::Interior) return false;
  return true;
}

bool all_closure(const Evidence& e) {
  for (const ConeVerdict& v : e.verdicts())
    if (v.status == ConeStatus::Outside) return false;
  return true;
}

bool all_zero_spectra(const Evidence& e) {
  for (const Spectrum& s : e.spectra())
    for (double v : s.values())
      if (std::fabs(v) > e.tolerance()) return false;
  return true;
}

// First `head` entries ~ 0, remaining entries equal, non-negative.
bool degenerate_profile(const Spectrum& s, std::size_t head, double tol) {
  if (s.size() <= head) return false;
  for (std::size_t i = 0; i < head; ++i)
    if (std::fabs(s[i]) > tol) return false;
  const double lo = s[head];
  const double hi = s[s.size() - 1];
  return lo >= -tol && (hi - lo) <= tol && hi > tol;
}

bool all_degenerate(const Evidence& e, std::size_t head) {
  for (const Spectrum& s : e.spectra())
    if (!degenerate_profile(s, head, e.tolerance())) return false;
  return true;
}

void require_classifiable(const Evidence& e, Geometry kind,
                          std::size_t min_dim, const char* what) {
  if (e.kind() != kind)
    throw ArgumentError(std::string(what) + ": wrong geometry kind");
  if (!e.compactness_asserted())
    throw PreconditionError(
        std::string(what) +
        ": the classification statements assume a compact manifold; "
        "compactness must be asserted by the caller");
  if (e.dim() < min_dim)
    throw PreconditionError(std::string(what) + ": needs dimension >= " +
                            std::to_string(min_dim));
}

}  // namespace

Evidence Evidence::gather(Geometry kind, std::size_t dim,
                          const std::vector<Spectrum>& spectra, std::size_t k,
                          double tolerance, bool compactness_asserted) {
  Evidence e;
  e.kind_ = kind;
  e.dim_ = dim;
  e.k_ = k;
  e.tolerance_ = tolerance;
  e.compact_ = compactness_asserted;
  if (!(tolerance > 0.0))
    throw ArgumentError("gather: tolerance must be > 0");
  if (spectra.empty()) throw ArgumentError("gather: no spectra supplied");
  const std::size_t N = kind == Geometry::Riemannian
                            ? dim * (dim - 1) / 2
                            : dim * dim;
  if (dim < 2 || N < 3)
    throw ArgumentError("gather: dimension too small for cone evidence");
  for (const Spectrum& s : spectra)
    if (s.size() != N)
      throw ArgumentError(
          "gather: mixed dimensions: every spectrum must have length " +
          std::to_string(N) + ", got " + std::to_string(s.size()));
  if (k < 1 || k > N - 1)
    throw RangeError("gather: needs 1 <= k <= N-1");

  const ShiftParameter alpha =
      kind == Geometry::Riemannian
          ? shift_threshold(N, k, ShiftKind::Riemannian)
          : shift_threshold(dim, k, ShiftKind::Kahler);
  e.alpha_ = alpha.alpha;
  e.spectra_ = spectra;
  e.shifted_.reserve(spectra.size());
  e.verdicts_.reserve(spectra.size());
  for (const Spectrum& s : spectra) {
    Spectrum sh = shift(s, alpha);
    e.verdicts_.push_back(cone_membership(sh, 2, tolerance));
    e.shifted_.push_back(std::move(sh));
  }
  return e;
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::SphericalSpaceForm:
      return "SphericalSpaceForm";
    case Conclusion::S2xS1OrRP2xS1:
      return "S2xS1-or-RP2xS1";
    case Conclusion::Flat:
      return "Flat";
    case Conclusion::KPositive:
      return "KPositive";
    case Conclusion::BiholomorphicCPn:
      return "BiholomorphicCPn";
    case Conclusion::CP1xCP1:
      return "CP1xCP1";
    case Conclusion::FlatTorus:
      return "FlatTorus";
    case Conclusion::NoConclusion:
      return "NoConclusion";
  }
  return "NoConclusion";
}

nlohmann::ordered_json Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["conclusion"] = to_string(conclusion);
  j["theorem"] = theorem;
  j["k"] = k;
  j["points_checked"] = points_checked;
  j["caveats"] = caveats;
  if (conclusion == Conclusion::KPositive)
    j["betti_vanishing"] = betti_vanishing;
  return j;
}

BettiResult betti_vanishing(std::size_t n, std::size_t k) {
  BettiResult out;
  if (n < 2) {
    out.caveat = "no Betti statement for n < 2";
    return out;
  }
  if (k < 1) {
    out.caveat = "k is below 1; no Betti statement applies";
    return out;
  }
  if (k > n - 1) {
    out.caveat = "k exceeds n-1; the Betti statement does not apply";
    return out;
  }
  const std::size_t half = (n + 1) / 2;  // ceil(n/2)
  if (k <= half) {
    for (std::size_t p = 1; p <= n - 1; ++p) out.indices.push_back(p);
    return out;
  }
  for (std::size_t p = 1; p <= n - k; ++p) out.indices.push_back(p);
  for (std::size_t p = k; p <= n - 1; ++p) out.indices.push_back(p);
  return out;
}

Verdict classify_riemannian(const Evidence& evidence) {
  require_classifiable(evidence, Geometry::Riemannian, 3,
                       "classify_riemannian");
  Verdict v;
  v.k = evidence.k();
  v.points_checked = evidence.spectra().size();
  v.caveats = base_caveats(evidence);
  v.theorem = "none";

  if (evidence.k() == 2) {
    if (all_interior(evidence)) {
      v.conclusion = Conclusion::SphericalSpaceForm;
      v.theorem = kSphereRigidity;
      return v;
    }
    if (all_closure(evidence)) {
      v.theorem = kBoundaryTrichotomy;
      if (all_zero_spectra(evidence)) {
        v.conclusion = Conclusion::Flat;
      } else if (evidence.dim() == 3 && all_degenerate(evidence, 2)) {
        v.conclusion = Conclusion::S2xS1OrRP2xS1;
      } else {
        v.conclusion = Conclusion::SphericalSpaceForm;
      }
      return v;
    }
    v.conclusion = Conclusion::NoConclusion;
    return v;
  }

  if (all_interior(evidence)) {
    v.conclusion = Conclusion::KPositive;
    v.theorem = kBettiVanishing;
    BettiResult betti = betti_vanishing(evidence.dim(), evidence.k());
    v.betti_vanishing = betti.indices;
    if (!betti.caveat.empty()) v.caveats.push_back(betti.caveat);
    return v;
  }
  v.conclusion = Conclusion::NoConclusion;
  return v;
}

Verdict classify_kahler(const Evidence& evidence) {
  require_classifiable(evidence, Geometry::Kahler, 2, "classify_kahler");
  Verdict v;
  v.k = evidence.k();
  v.points_checked = evidence.spectra().size();
  v.caveats = base_caveats(evidence);
  v.theorem = "none";
  v.conclusion = Conclusion::NoConclusion;

  if (evidence.k() != 2) {
    v.caveats.push_back(
        "only the k = 2 shifted cone carries stated Kahler conclusions");
    return v;
  }
  if (all_interior(evidence)) {
    v.conclusion = Conclusion::BiholomorphicCPn;
    v.theorem = kProjectiveRigidity;
    return v;
  }
  if (all_closure(evidence)) {
    v.theorem = kKahlerTrichotomy;
    if (all_zero_spectra(evidence)) {
      v.conclusion = Conclusion::FlatTorus;
    } else if (evidence.dim() == 2 && all_degenerate(evidence, 2)) {
      v.conclusion = Conclusion::CP1xCP1;
    } else {
      v.conclusion = Conclusion::BiholomorphicCPn;
    }
    return v;
  }
  return v;
}

}  // namespace curvcones
