#pragma once

#include <string_view>

namespace goat {

enum class Method { exact, numeric, contour, oracle };

constexpr std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::exact: return "exact";
        case Method::numeric: return "numeric";
        case Method::contour: return "contour";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

/// Half-grazing tether for one field dimension.
///
/// `k` is the tether length in units of the field radius, `beta` the angle at
/// the anchor between the centre line and the farthest reachable fence point
/// (k = 2 cos beta). The meaning of `residual` depends on `method`:
///   exact, numeric  the Fraser residual at beta
///   contour         |sin z - z cos z - pi/2| at z = 2 beta
///   oracle          lens volume minus half the ball volume
struct GoatSolution {
    double n = 0.0;
    double beta = 0.0;
    double k = 0.0;
    double residual = 0.0;
    Method method = Method::numeric;

    /// Tether length for a field of radius `r`.
    [[nodiscard]] double tether_length(double r) const noexcept { return k * r; }
};

}  // namespace goat
