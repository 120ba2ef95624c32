#pragma once

#include "geoplan/cut_locus.hpp"
#include "geoplan/metric.hpp"
#include "geoplan/permutation.hpp"
#include "geoplan/strat.hpp"

#include <string>
#include <vector>

namespace geoplan {

// Point of the flat Klein bottle, reduced into the fundamental square [0,1)^2
// of the deck group generated by alpha(u,v) = (u+1, 1-v) and beta(u,v) = (u, v+1).
class KleinPoint {
public:
    KleinPoint() : coords_{Rational(0), Rational(0)} {}
    KleinPoint(const Rational& x1, const Rational& x2);
    // Canonical projection of any point of the plane.
    static KleinPoint project(const Vec& p);

    const Vec& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    bool operator==(const KleinPoint&) const = default;

private:
    Vec coords_;
};

// alpha^a beta^b
struct DeckElement {
    long a = 0;
    long b = 0;

    Vec apply(const Vec& p) const;
    DeckElement inverse() const;
    // this * other, i.e. apply other first.
    DeckElement compose(const DeckElement& other) const;
    // Linear part: identity for even a, the reflection v -> -v for odd a.
    Vec apply_linear(const Vec& d) const;
    bool operator==(const DeckElement&) const = default;
};

struct KleinGeodesic {
    Vec start_lift;
    Vec end_lift;
    DeckElement deck; // end_lift = deck . y
    Rational squared_length;

    Vec displacement() const { return end_lift - start_lift; }
    Polyline lift() const;
    bool operator==(const KleinGeodesic&) const = default;
};

struct OrbitPoint {
    DeckElement deck;
    Vec point;
};

// alpha^a beta^b . y for |a|, |b| <= window, ordered by (a, b). window >= 1.
std::vector<OrbitPoint> klein_lift_orbit(const KleinPoint& y, int window);

// All minimizing lifts of y seen from x in the fundamental square, orbit window
// 2, sorted by end lift.
std::vector<KleinGeodesic> klein_geodesics(const KleinPoint& x, const KleinPoint& y, int window = 2);

int klein_stratum(const KleinPoint& x, const KleinPoint& y);

Rational klein_squared_distance(const KleinPoint& x, const KleinPoint& y);

// Dirichlet cell of x against its own window-2 orbit, projected to K.
CutLocusGraph klein_cut_locus(const KleinPoint& x);
// The cell polygon itself, counter-clockwise, in the universal cover.
std::vector<Vec> klein_dirichlet_cell(const KleinPoint& x);

// Domains 0..4: S1, S2 on A, S2 off A or S3 on A, S3 off A or S4 on A, S4 off A,
// where A = {x1 != 0}.
PlannerResult<KleinGeodesic> klein_plan(const KleinPoint& x, const KleinPoint& y);
int klein_domain(const KleinPoint& x, const KleinPoint& y);

// Sup distance between two Klein geodesics as paths in K, using the deck
// translate of b whose start lift is nearest the start lift of a.
ExactLength klein_sup_distance(const KleinGeodesic& a, const KleinGeodesic& b);

// Sheet permutation after continuing the four geodesics from (t, x2) to the
// degree-4 vertex of its cut locus once around t in [0,1). x2 in {0, 1/2},
// steps >= 8.
Permutation klein_monodromy(const Rational& x2, std::size_t steps);

// Sheet names of an S4 pair in the order used by klein_monodromy: UR, UL, DR, DL.
std::string klein_sheet_name(const Vec& displacement);

// kind: "S4_point"
StratPoset klein_local_poset(const std::string& kind = "S4_point");

} // namespace geoplan
