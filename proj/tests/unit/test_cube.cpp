#include "geoplan/cube.hpp"
#include "geoplan/errors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace geoplan;

namespace {

Rational q(long n, long d = 1) {
    return make_rational(n, d);
}

std::set<std::string> labels(const std::vector<UnfoldedPath>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.label());
    return out;
}

} // namespace

TEST(CubePoint, EdgesBelongToLowestLabelFace) {
    const CubePoint p(Face::xp, q(1, 2), q(0));
    EXPECT_EQ(p.faces().size(), 2u);
    EXPECT_EQ(CubePoint::from_position(p.position()), p);
    EXPECT_EQ(cube_corner_p().faces().size(), 3u);
    EXPECT_THROW(CubePoint::from_position({q(0), q(0), q(0)}), DomainError);
    EXPECT_THROW(CubePoint(Face::zm, q(1), q(0)), DomainError);
}

TEST(CubePoint, CornersAreOpposite) {
    EXPECT_EQ(cube_corner_p().position(), (Vec{q(-1, 2), q(-1, 2), q(-1, 2)}));
    EXPECT_EQ(cube_corner_q().position(), (Vec{q(1, 2), q(1, 2), q(1, 2)}));
}

TEST(Rotation, CyclesAxesAndFixesCorners) {
    EXPECT_EQ(rotate_about_corners(Vec{q(1), q(2), q(3)}), (Vec{q(3), q(1), q(2)}));
    EXPECT_EQ(rotate_about_corners(cube_corner_p()), cube_corner_p());
    EXPECT_EQ(rotate_about_corners(Face::zm), Face::xm);
    EXPECT_EQ(rotate_about_corners(Face::zp), Face::xp);
    EXPECT_EQ(rotate_about_corners(Face::zm, 3), Face::zm);
}

TEST(OppositeFaces, MidpointFormulas) {
    const auto t = opposite_face_table({q(0), q(0)}, {q(0), q(0)});
    for (int i : {0, 3, 6, 9}) EXPECT_EQ(t.L_sq[i], 4);
    EXPECT_EQ(t.L_sq[1], 5);
    EXPECT_EQ(t.common, 4);
    const auto g = cube_geodesics(CubePoint(Face::zm, q(0), q(0)), CubePoint(Face::zp, q(0), q(0)));
    EXPECT_EQ(g.size(), 4u);
    EXPECT_EQ(g.front().squared_length, 4);
}

TEST(OppositeFaces, SymmetricDiagonalValues) {
    const auto n = diagonal_table(q(1, 4), q(1, 4));
    const std::array<Rational, 12> want{q(0), q(3, 8), q(3, 8), q(0), q(9, 8), q(1, 8),
                                        q(0), q(3, 8), q(3, 8), q(0), q(1, 8), q(9, 8)};
    EXPECT_EQ(n, want);
}

TEST(CubeGeodesics, Examples) {
    const CubePoint x(Face::yp, q(1, 5), q(-1, 7));
    const auto same = cube_geodesics(x, x);
    ASSERT_EQ(same.size(), 1u);
    EXPECT_EQ(same[0].squared_length, 0);

    const auto corners = cube_geodesics(cube_corner_p(), cube_corner_q());
    EXPECT_EQ(corners.size(), 6u);
    for (const auto& g : corners) EXPECT_EQ(g.squared_length, 5);
    EXPECT_EQ(labels(corners), (std::set<std::string>{"D1", "D2", "D3", "D4", "D5", "D6"}));

    const auto diag = cube_geodesics(CubePoint(Face::zm, q(-1, 5), q(-1, 5)), CubePoint(Face::zp, q(1, 5), q(-1, 5)));
    EXPECT_EQ(labels(diag), (std::set<std::string>{"A1", "A4", "A7", "A10"}));
}

TEST(CubeGeodesics, SameFaceIsStraight) {
    const auto g = cube_geodesics(CubePoint(Face::zm, q(-1, 4), q(0)), CubePoint(Face::zm, q(1, 4), q(0)));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].squared_length, q(1, 4));
    EXPECT_EQ(g[0].face_sequence.size(), 1u);
}

TEST(CubeGeodesics, TracesAreGeodesicPolylines) {
    const auto gs = cube_geodesics(CubePoint(Face::zm, q(-1, 3), q(1, 5)), CubePoint(Face::zp, q(2, 7), q(-1, 9)));
    ASSERT_FALSE(gs.empty());
    for (const auto& g : gs) {
        const Polyline p = g.surface_polyline();
        EXPECT_EQ(path_length(p).square(), g.squared_length);
        EXPECT_TRUE(is_geodesic(p, 5) || g.face_sequence.size() > 1);
    }
}

TEST(CubeGeodesics, FaceBoundLimits) {
    const CubePoint a(Face::zm, q(0), q(0)), b(Face::zp, q(0), q(0));
    EXPECT_THROW(cube_paths(a, b, 7), DomainError);
    EXPECT_THROW(cube_paths(a, b, 0), DomainError);
}

TEST(Candidates, SequencesAndRotations) {
    EXPECT_EQ(candidate_sequence('A', 1), (std::vector<Face>{Face::zm, Face::yp, Face::zp}));
    for (int i = 1; i <= 12; ++i) {
        const auto& a = candidate_sequence('A', i);
        const auto& c = candidate_sequence('C', i);
        const auto& b = candidate_sequence('B', i);
        ASSERT_EQ(a.size(), c.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            EXPECT_EQ(rotate_about_corners(a[k], 1), c[k]);
            EXPECT_EQ(rotate_about_corners(a[k], 2), b[k]);
        }
    }
    EXPECT_THROW(candidate_sequence('D', 1), DomainError);
    EXPECT_THROW(candidate_sequence('A', 13), DomainError);
}

TEST(CornerLimits, TableAndEmptyIntersection) {
    const auto& t = corner_limit_table();
    EXPECT_EQ(t.at("A1"), "D3");
    EXPECT_EQ(t.at("C10"), "D5");
    std::set<std::string> common{"D1", "D2", "D3", "D4", "D5", "D6"};
    for (char f : {'A', 'B', 'C'}) {
        std::set<std::string> image, next;
        for (int i : {1, 4, 7, 10}) image.insert(t.at(std::string(1, f) + std::to_string(i)));
        EXPECT_EQ(image.size(), 4u);
        for (const auto& d : common)
            if (image.count(d)) next.insert(d);
        common = next;
    }
    EXPECT_TRUE(common.empty());
}

TEST(Witnesses, PreimageSets) {
    const WitnessSet w = witness_sequences(2, 3, witness_min_k(2, 3, false));
    EXPECT_EQ(w.s.geodesics, (std::vector<std::string>{"A1", "A4", "A7", "A10"}));
    EXPECT_EQ(w.r_I.geodesics, (std::vector<std::string>{"A1", "A4"}));
    ASSERT_TRUE(w.r_II.has_value());
    EXPECT_EQ(w.r_II->geodesics, (std::vector<std::string>{"A7", "A10"}));
    EXPECT_EQ(w.t_I.geodesics, (std::vector<std::string>{"A1"}));
    EXPECT_FALSE(witness_sequences(3, 2, 1).r_II.has_value());
    EXPECT_THROW(witness_sequences(0, 1, 1), DomainError);
}

TEST(CornerPoset, Bound) {
    const auto p = cube_corner_poset();
    EXPECT_TRUE(validate_poset(p).ok);
    EXPECT_EQ(lower_bound(p).lower_bound, 3);
    EXPECT_TRUE(inconsistent_at(p, "s:A"));
    EXPECT_FALSE(inconsistent_at(p, "t:A1"));
}
