#include "geoplan/errors.hpp"
#include "geoplan/torus.hpp"
#include "geoplan/verify/oracles.hpp"
#include "geoplan/verify/rng.hpp"

#include <gtest/gtest.h>

using namespace geoplan;

namespace {

Rational q(long n, long d = 1) {
    return make_rational(n, d);
}

TorusPoint pt(std::initializer_list<Rational> c) {
    return TorusPoint(Vec(c));
}

std::vector<Vec> displacements(const std::vector<TorusGeodesic>& gs) {
    std::vector<Vec> out;
    for (const auto& g : gs) out.push_back(g.displacement);
    return out;
}

} // namespace

TEST(TorusPoint, ReducesIntoUnitCube) {
    EXPECT_EQ(pt({q(-1, 4), q(5, 2)}).coords(), (Vec{q(3, 4), q(1, 2)}));
}

TEST(TorusStratum, CountsAntipodalCoordinates) {
    EXPECT_EQ(torus_stratum(pt({q(0), q(0)}), pt({q(3, 10), q(1, 5)})), 1);
    EXPECT_EQ(torus_stratum(pt({q(0), q(0)}), pt({q(1, 2), q(1, 5)})), 2);
    EXPECT_EQ(torus_stratum(pt({q(0), q(0)}), pt({q(1, 2), q(1, 2)})), 3);
    EXPECT_TRUE(torus_antipodal(q(3, 4), q(1, 4)));
    EXPECT_THROW(torus_stratum(pt({q(0)}), pt({q(0), q(0)})), DimensionMismatch);
}

TEST(TorusGeodesics, Examples) {
    const auto same = torus_geodesics(pt({q(1, 3), q(1, 3)}), pt({q(1, 3), q(1, 3)}));
    ASSERT_EQ(same.size(), 1u);
    EXPECT_EQ(same[0].squared_length, 0);

    EXPECT_EQ(displacements(torus_geodesics(pt({q(0), q(0)}), pt({q(1, 2), q(1, 5)}))),
              (std::vector<Vec>{{q(-1, 2), q(1, 5)}, {q(1, 2), q(1, 5)}}));

    const auto four = torus_geodesics(pt({q(0), q(0)}), pt({q(1, 2), q(1, 2)}));
    EXPECT_EQ(displacements(four), verify::torus_lattice_minimizers({q(0), q(0)}, {q(1, 2), q(1, 2)}));
    EXPECT_EQ(four.size(), 4u);
    for (const auto& g : four) {
        EXPECT_EQ(g.squared_length, q(1, 2));
        EXPECT_TRUE(is_geodesic(g.lift(), 9));
    }
}

TEST(TorusGeodesics, AgreeWithLatticeOracle) {
    verify::Rng rng(verify::default_seed());
    for (std::size_t n = 1; n <= 4; ++n)
        for (int t = 0; t < 200; ++t) {
            Vec x(n), y(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = rng.unit(60);
                y[i] = rng.coin() ? x[i] + q(1, 2) : rng.unit(60);
            }
            const auto gs = torus_geodesics(TorusPoint(x), TorusPoint(y));
            EXPECT_EQ(displacements(gs), verify::torus_lattice_minimizers(TorusPoint(x).coords(), TorusPoint(y).coords()));
            EXPECT_EQ(gs.size(), std::size_t{1} << (torus_stratum(TorusPoint(x), TorusPoint(y)) - 1));
        }
}

TEST(TorusCutLocus, Examples) {
    const auto c2 = torus_cut_locus(pt({q(0), q(0)}));
    ASSERT_EQ(c2.vertices.size(), 1u);
    EXPECT_EQ(c2.vertices[0].point, (Vec{q(1, 2), q(1, 2)}));
    EXPECT_EQ(c2.vertices[0].multiplicity, 4);
    EXPECT_EQ(c2.edges.size(), 2u);
    for (const auto& e : c2.edges) EXPECT_EQ(e.multiplicity, 2);
    EXPECT_EQ(c2.shape(), "wedge");

    const auto c1 = torus_cut_locus(pt({q(0)}));
    ASSERT_EQ(c1.vertices.size(), 1u);
    EXPECT_EQ(c1.vertices[0].point, (Vec{q(1, 2)}));
    EXPECT_EQ(c1.vertices[0].multiplicity, 2);
    EXPECT_EQ(c1.shape(), "point");

    EXPECT_EQ(torus_cut_locus(pt({q(1, 4), q(3, 4)})).vertices[0].point, (Vec{q(3, 4), q(1, 4)}));
}

TEST(TorusCutLocus, StrataInHigherDimensions) {
    const auto c = torus_cut_locus(pt({q(0), q(0), q(0)}));
    EXPECT_EQ(c.strata.size(), 7u);
    for (const auto& s : c.strata) {
        EXPECT_EQ(s.dimension, 3 - s.antipodal.size());
        EXPECT_EQ(s.multiplicity, 1 << s.antipodal.size());
    }
}

TEST(TorusPlan, Examples) {
    const auto a = torus_plan(pt({q(0), q(0)}), pt({q(3, 10), q(1, 5)}));
    EXPECT_EQ(a.domain, 0);
    EXPECT_EQ(a.geodesic.displacement, (Vec{q(3, 10), q(1, 5)}));
    const auto b = torus_plan(pt({q(0), q(0)}), pt({q(1, 2), q(1, 5)}));
    EXPECT_EQ(b.domain, 1);
    EXPECT_EQ(b.geodesic.displacement, (Vec{q(1, 2), q(1, 5)}));
    const auto c = torus_plan(pt({q(0), q(0)}), pt({q(1, 2), q(1, 2)}));
    EXPECT_EQ(c.domain, 2);
    EXPECT_EQ(c.geodesic.displacement, (Vec{q(1, 2), q(1, 2)}));
    EXPECT_EQ(torus_plan(pt({q(0), q(0)}), pt({q(1, 10), q(1, 10)})).domain, 0);
}

TEST(TorusSupDistance, UsesNearestLift) {
    const TorusGeodesic a{pt({q(0)}), {q(1, 10)}, q(1, 100)};
    const TorusGeodesic b{pt({q(99, 100)}), {q(1, 10)}, q(1, 100)};
    EXPECT_EQ(torus_sup_distance(a, b).as_rational(), q(1, 100));
}

TEST(TorusMonodromy, LoopIsTrivial) {
    EXPECT_TRUE(torus_monodromy(2, 64).is_identity());
    EXPECT_EQ(torus_monodromy(1, 64).size(), 2u);
    EXPECT_THROW(torus_monodromy(2, 4), Error);
}

TEST(TorusLocalPoset, Shape) {
    const auto p2 = torus_local_poset(2);
    EXPECT_EQ(p2.levels(), 3);
    EXPECT_EQ(p2.elements.size(), 9u);
    EXPECT_TRUE(validate_poset(p2).ok);
    EXPECT_TRUE(inconsistent_at(p2, "**"));
    const auto p3 = torus_local_poset(3);
    EXPECT_EQ(p3.levels(), 4);
    EXPECT_EQ(lower_bound(p3).lower_bound, 3);
}
