// Geometry flavor selector shared by the threshold, arithmetic and
// classification modules.
#pragma once

#include <string_view>

namespace curvcones {

enum class Geometry { Riemannian, Kahler };

inline constexpr std::string_view to_string(Geometry g) {
  return g == Geometry::Riemannian ? "riemannian" : "kahler";
}

}  // namespace curvcones
