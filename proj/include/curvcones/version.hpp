// Tool identity and the convention statement embedded in every report.
#pragma once

#include <string_view>

namespace curvcones {

inline constexpr std::string_view kToolName = "curvcones";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Every report carries this statement so that numbers in it can be
// reproduced without consulting the source: it pins the basis order, the
// sign anchor, and the default tolerances.
inline constexpr std::string_view kConventionStatement =
    "two-form basis {e_i^e_j : i<j} ordered lexicographically, unit norm; "
    "operator diagonal equals sectional curvature (unit round sphere gives "
    "the identity matrix); Kahler basis lists n diagonal directions, then a "
    "(symmetric, antisymmetric) pair per i<j; eigenvalues ascending; "
    "default cone tolerance 1e-9, default chart step 1e-3";

}  // namespace curvcones
