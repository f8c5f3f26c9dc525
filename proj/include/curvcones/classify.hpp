// Maps per-point cone-membership evidence to classification verdicts, and
// tabulates the Betti-vanishing consequences of k-positive shifted spectra.
// Verdicts never claim more than the sampled points support and always carry
// the sampling and compactness caveats.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvcones/geometry.hpp"
#include "curvcones/symcone.hpp"

namespace curvcones {

// Aggregated per-point evidence.  `dim` is the manifold dimension n for
// Riemannian geometry and the complex dimension for Kahler geometry; all
// spectra must share the matching operator size N (n(n-1)/2 or n^2).
class Evidence {
 public:
  // Verdicts are recomputed from the shifted spectra here, so stored and
  // recomputable verdicts agree by construction.  Requires at least one
  // spectrum; k in [1, N-1]; compactness_asserted records the caller's
  // claim (charts cannot certify it).
  static Evidence gather(Geometry kind, std::size_t dim,
                         const std::vector<Spectrum>& spectra, std::size_t k,
                         double tolerance, bool compactness_asserted);

  Geometry kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  std::size_t k() const { return k_; }
  double tolerance() const { return tolerance_; }
  bool compactness_asserted() const { return compact_; }
  const std::vector<Spectrum>& spectra() const { return spectra_; }
  const std::vector<Spectrum>& shifted() const { return shifted_; }
  const std::vector<ConeVerdict>& verdicts() const { return verdicts_; }
  double alpha() const { return alpha_; }

 private:
  Geometry kind_ = Geometry::Riemannian;
  std::size_t dim_ = 0;
  std::size_t k_ = 0;
  double tolerance_ = 1e-9;
  double alpha_ = 0.0;
  bool compact_ = false;
  std::vector<Spectrum> spectra_, shifted_;
  std::vector<ConeVerdict> verdicts_;
};

enum class Conclusion {
  SphericalSpaceForm,
  S2xS1OrRP2xS1,
  Flat,
  KPositive,
  BiholomorphicCPn,
  CP1xCP1,
  FlatTorus,
  NoConclusion,
};

const char* to_string(Conclusion c);

struct Verdict {
  Conclusion conclusion = Conclusion::NoConclusion;
  std::string theorem;  // descriptive label; "none" for NoConclusion
  std::size_t k = 0;
  std::size_t points_checked = 0;
  std::vector<std::string> caveats;
  std::vector<std::size_t> betti_vanishing;  // only for KPositive

  nlohmann::ordered_json to_json() const;
};

struct BettiResult {
  std::vector<std::size_t> indices;  // ascending
  std::string caveat;                // nonempty when outside the stated range
};

// Vanishing Betti indices implied by a k-positive shifted curvature
// operator on a compact n-manifold: the full band {1,...,n-1} when
// k <= ceil(n/2), the split band {1,...,n-k} + {k,...,n-1} when
// ceil(n/2)+1 <= k <= n-1, and nothing (with a caveat) otherwise.
BettiResult betti_vanishing(std::size_t n, std::size_t k);

// Riemannian classification ladder.  k = 2: Interior everywhere maps to the
// spherical-space-form rigidity statement; closure everywhere maps to the
// boundary trichotomy with the branch read off the observed degenerate
// profile; any Outside point yields NoConclusion.  k != 2: Interior
// everywhere yields the k-positivity statement plus Betti consequences.
// Requires Riemannian evidence with n >= 3 and asserted compactness
// (PreconditionError otherwise).
Verdict classify_riemannian(const Evidence& evidence);

// Kahler counterpart (complex dimension n >= 2, k = 2 for the rigidity
// statements): Interior everywhere -> biholomorphic projective space;
// closure everywhere -> trichotomy (product of lines / flat torus /
// projective space).
Verdict classify_kahler(const Evidence& evidence);

}  // namespace curvcones
