#pragma once

#include "geoplan/metric.hpp"

#include <utility>
#include <vector>

namespace geoplan::verify {

// Brute force over every lattice lift y + m, m in [-window, window]^n: the
// displacement vectors of minimal length, sorted.
std::vector<Vec> torus_lattice_minimizers(const Vec& x, const Vec& y, int window = 2);

// Images of y under every deck transformation reachable by words of at most
// `radius` letters in alpha, beta and their inverses. The group elements are
// built by multiplying affine matrices, independently of any closed formula.
std::vector<Vec> klein_word_orbit(const Vec& y, int radius);

struct OrbitMinimum {
    Rational squared_distance;
    std::vector<Vec> lifts; // sorted
    Rational gap;           // second smallest minus smallest squared distance
};
OrbitMinimum klein_orbit_minimum(const Vec& x, const Vec& y, int radius = 6);

// Sum of chord lengths over a partition of [0,1], in floating point.
long double partition_sum(const Polyline& p, const std::vector<Rational>& partition);

} // namespace geoplan::verify
