#include "geoplan/errors.hpp"
#include "geoplan/klein.hpp"
#include "geoplan/verify/oracles.hpp"
#include "geoplan/verify/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace geoplan;

namespace {

Rational q(long n, long d = 1) {
    return make_rational(n, d);
}

std::vector<Vec> ends(const std::vector<KleinGeodesic>& gs) {
    std::vector<Vec> out;
    for (const auto& g : gs) out.push_back(g.end_lift);
    return out;
}

} // namespace

TEST(DeckGroup, GeneratorsAndComposition) {
    const DeckElement alpha{1, 0}, beta{0, 1};
    EXPECT_EQ(alpha.apply({q(1, 4), q(1, 3)}), (Vec{q(5, 4), q(2, 3)}));
    EXPECT_EQ(beta.apply({q(1, 4), q(1, 3)}), (Vec{q(1, 4), q(4, 3)}));
    EXPECT_EQ(alpha.compose(beta).apply({q(0), q(0)}), (Vec{q(1), q(0)}));
    verify::Rng rng(verify::default_seed());
    for (int t = 0; t < 200; ++t) {
        const DeckElement g{rng.range(-3, 3), rng.range(-3, 3)}, h{rng.range(-3, 3), rng.range(-3, 3)};
        const Vec p{rng.unit(50), rng.unit(50)};
        EXPECT_EQ(g.compose(h).apply(p), g.apply(h.apply(p)));
        EXPECT_EQ(g.inverse().apply(g.apply(p)), p);
        // The linear part is the derivative of the affine map.
        const Vec d{rng.unit(50), rng.unit(50)};
        EXPECT_EQ(g.apply(p + d) - g.apply(p), g.apply_linear(d));
    }
}

TEST(KleinPoint, ProjectsIntoFundamentalSquare) {
    EXPECT_EQ(KleinPoint::project({q(5, 4), q(1, 4)}).coords(), (Vec{q(1, 4), q(3, 4)}));
    EXPECT_EQ(KleinPoint::project({q(1, 4), q(-1, 4)}).coords(), (Vec{q(1, 4), q(3, 4)}));
}

TEST(KleinOrbit, Window) {
    const auto orbit = klein_lift_orbit(KleinPoint(q(0), q(0)), 1);
    EXPECT_TRUE(std::any_of(orbit.begin(), orbit.end(), [](const OrbitPoint& o) { return o.point == Vec{q(1), q(0)}; }));
    EXPECT_THROW(klein_lift_orbit(KleinPoint(q(0), q(0)), 0), Error);
}

TEST(KleinGeodesics, Examples) {
    const auto same = klein_geodesics(KleinPoint(q(1, 4), q(1, 4)), KleinPoint(q(1, 4), q(1, 4)));
    ASSERT_EQ(same.size(), 1u);
    EXPECT_EQ(same[0].squared_length, 0);

    const auto four = klein_geodesics(KleinPoint(q(1, 2), q(1, 2)), KleinPoint(q(0), q(0)));
    EXPECT_EQ(ends(four), (std::vector<Vec>{{q(0), q(0)}, {q(0), q(1)}, {q(1), q(0)}, {q(1), q(1)}}));
    for (const auto& g : four) EXPECT_EQ(g.squared_length, q(1, 2));

    EXPECT_EQ(klein_stratum(KleinPoint(q(1, 2), q(1, 2)), KleinPoint(q(0), q(1, 4))), 2);
    EXPECT_EQ(klein_stratum(KleinPoint(q(1, 10), q(1, 5)), KleinPoint(q(1, 5), q(1, 5))), 1);
}

TEST(KleinGeodesics, ThetaVerticesHaveThreeGeodesics) {
    const KleinPoint x(q(1, 2), q(3, 10));
    for (const auto& v : klein_cut_locus(x).vertices) {
        const KleinPoint y(v.point[0], v.point[1]);
        EXPECT_EQ(klein_stratum(x, y), 3);
        EXPECT_EQ(verify::klein_orbit_minimum(x.coords(), y.coords()).lifts.size(), 3u);
    }
}

TEST(KleinGeodesics, AgreeWithWordOracle) {
    verify::Rng rng(verify::default_seed());
    for (int t = 0; t < 300; ++t) {
        const KleinPoint x(rng.unit(40), rng.unit(40)), y(rng.unit(40), rng.unit(40));
        const auto m = verify::klein_orbit_minimum(x.coords(), y.coords());
        EXPECT_EQ(ends(klein_geodesics(x, y)), m.lifts);
        EXPECT_EQ(klein_squared_distance(x, y), m.squared_distance);
    }
}

TEST(KleinCutLocus, WedgeAndTheta) {
    const auto w = klein_cut_locus(KleinPoint(q(1, 2), q(1, 2)));
    EXPECT_EQ(w.shape(), "wedge");
    ASSERT_EQ(w.vertices.size(), 1u);
    EXPECT_EQ(w.vertices[0].multiplicity, 4);

    const auto t = klein_cut_locus(KleinPoint(q(1, 2), q(3, 10)));
    EXPECT_EQ(t.shape(), "theta");
    ASSERT_EQ(t.vertices.size(), 2u);
    EXPECT_EQ(t.edges.size(), 3u);
    for (const auto& v : t.vertices) EXPECT_EQ(v.multiplicity, 3);

    EXPECT_EQ(klein_cut_locus(KleinPoint(q(0), q(0))).shape(), "wedge");
}

TEST(KleinCutLocus, CellAreaIsOne) {
    // The Dirichlet cell is a fundamental domain of the deck group.
    for (const auto& x : {KleinPoint(q(1, 2), q(1, 2)), KleinPoint(q(1, 3), q(3, 10)), KleinPoint(q(0), q(1, 7))}) {
        const auto cell = klein_dirichlet_cell(x);
        Rational twice = 0;
        for (std::size_t i = 0; i < cell.size(); ++i) {
            const Vec& a = cell[i];
            const Vec& b = cell[(i + 1) % cell.size()];
            twice += a[0] * b[1] - a[1] * b[0];
        }
        EXPECT_EQ(twice, 2);
    }
}

TEST(KleinPlan, Examples) {
    const auto unique = klein_plan(KleinPoint(q(1, 10), q(1, 5)), KleinPoint(q(1, 5), q(1, 5)));
    EXPECT_EQ(unique.domain, 0);

    const auto edge = klein_plan(KleinPoint(q(1, 2), q(1, 2)), KleinPoint(q(0), q(1, 4)));
    EXPECT_EQ(edge.domain, 1);
    EXPECT_EQ(edge.geodesic.end_lift, (Vec{q(1), q(3, 4)}));

    const auto vertex = klein_plan(KleinPoint(q(1, 2), q(1, 2)), KleinPoint(q(0), q(0)));
    EXPECT_EQ(vertex.domain, 3);
    EXPECT_EQ(vertex.geodesic.end_lift, (Vec{q(1), q(1)}));

    // Off A every stratum moves up one domain.
    EXPECT_EQ(klein_domain(KleinPoint(q(0), q(1, 2)), KleinPoint(q(1, 2), q(0))), 4);
}

TEST(KleinMonodromy, NontrivialOrderTwo) {
    for (const Rational& x2 : {q(1, 2), q(0)}) {
        const Permutation p = klein_monodromy(x2, 64);
        EXPECT_FALSE(p.is_identity());
        EXPECT_EQ(p.order(), 2u);
    }
    EXPECT_THROW(klein_monodromy(q(1, 3), 64), DomainError);
    EXPECT_THROW(klein_monodromy(q(1, 2), 4), Error);
}

TEST(KleinLocalPoset, Bound) {
    const auto p = klein_local_poset();
    EXPECT_TRUE(validate_poset(p).ok);
    EXPECT_EQ(lower_bound(p).lower_bound, 3);
    EXPECT_TRUE(inconsistent_at(p, "S4"));
    EXPECT_FALSE(inconsistent_at(p, "S1:UR"));
    EXPECT_THROW(klein_local_poset("other"), DomainError);
}
