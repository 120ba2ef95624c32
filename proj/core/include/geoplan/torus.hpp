#pragma once

#include "geoplan/cut_locus.hpp"
#include "geoplan/metric.hpp"
#include "geoplan/permutation.hpp"
#include "geoplan/strat.hpp"

#include <cstddef>
#include <vector>

namespace geoplan {

// Point of the flat torus R^n / Z^n (circumference 1 in every factor).
class TorusPoint {
public:
    TorusPoint() = default;
    // Coordinates are reduced into [0,1).
    explicit TorusPoint(Vec coords);

    std::size_t dimension() const { return coords_.size(); }
    const Vec& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const TorusPoint&) const = default;

private:
    Vec coords_;
};

struct TorusGeodesic {
    TorusPoint start;
    Vec displacement; // every entry in [-1/2, 1/2]
    Rational squared_length;

    // start + t * displacement in the universal cover, start in [0,1)^n.
    Polyline lift() const;
    bool operator==(const TorusGeodesic&) const = default;
};

// True when y_i - x_i - 1/2 is an integer.
bool torus_antipodal(const Rational& x, const Rational& y);

// 1 + number of antipodal coordinates.
int torus_stratum(const TorusPoint& x, const TorusPoint& y);

// All 2^(k-1) geodesics, sorted lexicographically by displacement.
std::vector<TorusGeodesic> torus_geodesics(const TorusPoint& x, const TorusPoint& y);

// n = 1: the antipode. n = 2: wedge of the two coordinate circles through the
// antipode. Every n: one stratum record per nonempty antipodal subset.
CutLocusGraph torus_cut_locus(const TorusPoint& x);

// Domain stratum - 1; antipodal coordinates move by +1/2.
PlannerResult<TorusGeodesic> torus_plan(const TorusPoint& x, const TorusPoint& y);

// Sup distance of two torus geodesics as paths in the torus, computed on lifts
// after moving the second start to the lift nearest the first.
ExactLength torus_sup_distance(const TorusGeodesic& a, const TorusGeodesic& b);
// Distance on the torus.
Rational torus_squared_distance(const TorusPoint& x, const TorusPoint& y);

// Continues the 2^n geodesics from (t, c) to its full antipode around the loop
// t in [0,1) and returns the permutation of sheets after one turn. The torus is
// orientable, so this is the identity.
Permutation torus_monodromy(std::size_t n, std::size_t steps);

// Local poset at a pair with every coordinate antipodal: faces of the n-cube
// as sign vectors over {+,-,*}, level = number of '*' plus one.
StratPoset torus_local_poset(std::size_t n);

} // namespace geoplan
