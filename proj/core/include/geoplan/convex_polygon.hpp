#pragma once

#include "geoplan/metric.hpp"

#include <vector>

namespace geoplan {

// Closed half-plane a*x + b*y <= c.
struct HalfPlane {
    Rational a, b, c;
    bool contains(const Vec& p) const { return a * p[0] + b * p[1] <= c; }
};

// Points closer to `keep` than to `other` (bisector side, boundary included).
HalfPlane bisector_half_plane(const Vec& keep, const Vec& other);

// Counter-clockwise axis-aligned box.
std::vector<Vec> box_polygon(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);

// Sutherland-Hodgman step for a convex polygon, exact. Degenerate outputs
// (fewer than 3 vertices) come back empty.
std::vector<Vec> clip(const std::vector<Vec>& polygon, const HalfPlane& h);

// Drops repeated and collinear vertices so every remaining vertex is a corner.
std::vector<Vec> simplify_polygon(const std::vector<Vec>& polygon);

Rational twice_signed_area(const std::vector<Vec>& polygon);

} // namespace geoplan
