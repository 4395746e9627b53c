#pragma once

#include <array>
#include <optional>

#include "cremona/plane.hpp"

namespace cremona {

/// Frobenius orbit of 8 distinct points: points[i] = Frob^i(points[0]), points[0] lexicographically minimal.
struct GaloisOrbit8 {
    std::array<ProjPoint, 8> points;

    const ProjPoint& seed() const { return points[0]; }
    std::array<ProjPoint, 8> sorted() const;
    friend bool operator==(const GaloisOrbit8&, const GaloisOrbit8&) = default;
};

/// Orbit of pt when it has exactly 8 points; F must be a degree-8 extension.
std::optional<GaloisOrbit8> orbit_from_point(const Field& F, const ProjPoint& pt);

}  // namespace cremona
