#include "geoplan/errors.hpp"
#include "geoplan/metric.hpp"
#include "geoplan/verify/oracles.hpp"
#include "geoplan/verify/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace geoplan;

namespace {

Rational q(long n, long d = 1) {
    return make_rational(n, d);
}

Polyline path(std::vector<Vec> vs, std::vector<Rational> ps) {
    Polyline p;
    p.vertices = std::move(vs);
    p.params = std::move(ps);
    p.chart = "plane";
    return p;
}

// Largest chord sum over many random partitions; never exceeds the length.
long double best_partition(const Polyline& p, std::size_t count, verify::Rng& rng) {
    long double best = 0;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Rational> part{q(0)};
        for (int i = 0; i < 8; ++i) part.push_back(rng.unit(1000));
        part.push_back(q(1));
        std::sort(part.begin(), part.end());
        best = std::max(best, verify::partition_sum(p, part));
    }
    return best;
}

} // namespace

TEST(ExactLength, NormalizesRadicals) {
    EXPECT_EQ(ExactLength::sqrt_of(q(8)).str(), "2*sqrt(2)");
    EXPECT_EQ(ExactLength::sqrt_of(q(9, 4)).str(), "3/2");
    ExactLength l = ExactLength::sqrt_of(q(2));
    l += ExactLength::sqrt_of(q(8));
    EXPECT_EQ(l.str(), "3*sqrt(2)");
    EXPECT_EQ(l.square(), q(18));
    l += ExactLength(q(1));
    EXPECT_FALSE(l.square().has_value());
    EXPECT_EQ(ExactLength::sqrt_of(q(2)).decimal(10), "1.4142135624");
}

TEST(PathLength, Segments) {
    EXPECT_EQ(path_length(Polyline::uniform({{q(0), q(0)}, {q(3), q(4)}})).as_rational(), q(5));
    EXPECT_TRUE(path_length(Polyline::uniform({{q(2), q(7)}})).is_zero());
}

TEST(PathLength, LShapeMatchesPartitionSupremum) {
    const Polyline p = Polyline::uniform({{q(0), q(0)}, {q(1), q(0)}, {q(1), q(1)}});
    EXPECT_EQ(path_length(p).as_rational(), q(2));
    verify::Rng rng(verify::default_seed());
    const long double best = best_partition(p, 10000, rng);
    EXPECT_LE(best, 2.0L + 1e-15L);
    EXPECT_GT(best, 2.0L - 1e-2L);
    EXPECT_NEAR(static_cast<double>(verify::partition_sum(p, p.params)), 2.0, 1e-15);
}

TEST(PathLength, IrrationalSumsStayExact) {
    const Polyline p = Polyline::uniform({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}, {q(2), q(1)}});
    EXPECT_EQ(path_length(p).str(), "1+2*sqrt(2)");
}

TEST(IsGeodesic, ConstantSpeedSegments) {
    EXPECT_TRUE(is_geodesic(Polyline::uniform({{q(0), q(0)}, {q(1), q(0)}}), 11));
    const Polyline slow = path({{q(0), q(0)}, {q(1, 2), q(0)}, {q(1), q(0)}}, {q(0), q(1, 4), q(1)});
    EXPECT_FALSE(is_geodesic(slow, 11));
    // Speed 2 on [0,1/4] against the average 1.
    EXPECT_EQ(squared_distance(slow.at(q(0)), slow.at(q(1, 4))), q(1, 4));
    EXPECT_FALSE(is_geodesic(Polyline::uniform({{q(0), q(0)}, {q(1), q(0)}, {q(1), q(1)}}), 11));
}

TEST(IsGeodesic, ToleranceAdmitsSmallDefects) {
    const Polyline p = path({{q(0), q(0)}, {q(1, 2), q(0)}, {q(1), q(0)}}, {q(0), q(501, 1000), q(1)});
    EXPECT_FALSE(is_geodesic(p, 5));
    EXPECT_TRUE(is_geodesic(p, 5, q(1, 100)));
}

TEST(SupDistance, Examples) {
    const Polyline a = Polyline::uniform({{q(0), q(0)}, {q(1), q(0)}});
    EXPECT_TRUE(sup_distance(a, a).is_zero());
    const Polyline b = Polyline::uniform({{q(0), q(1)}, {q(1), q(1)}});
    EXPECT_EQ(sup_distance(a, b).as_rational(), q(1));
    const Polyline c = Polyline::uniform({{q(0), q(0)}, {q(0), q(1)}});
    EXPECT_EQ(sup_distance(a, c).str(), "sqrt(2)");
    // A dense grid never beats the breakpoint value.
    for (long i = 0; i <= 1000; ++i) EXPECT_LE(squared_distance(a.at(q(i, 1000)), c.at(q(i, 1000))), q(2));
}

TEST(SupDistance, RequiresMatchingDimensions) {
    EXPECT_THROW(sup_distance(Polyline::uniform({{q(0)}, {q(1)}}), Polyline::uniform({{q(0), q(0)}, {q(1), q(0)}})),
                 DimensionMismatch);
}

TEST(Reparametrize, CumulativeLengthFractions) {
    const Polyline p = path({{q(0), q(0)}, {q(1, 2), q(0)}, {q(1), q(0)}}, {q(0), q(1, 4), q(1)});
    EXPECT_EQ(reparametrize_constant_speed(p).params, (std::vector<Rational>{q(0), q(1, 2), q(1)}));
    const Polyline l = path({{q(0), q(0)}, {q(1), q(0)}, {q(1), q(1)}}, {q(0), q(1, 10), q(1)});
    EXPECT_EQ(reparametrize_constant_speed(l).params, (std::vector<Rational>{q(0), q(1, 2), q(1)}));
}

TEST(Reparametrize, ConstantPathUnchanged) {
    const Polyline p = path({{q(2), q(7)}, {q(2), q(7)}}, {q(0), q(1)});
    const Polyline out = reparametrize_constant_speed(p);
    EXPECT_EQ(out.vertices, p.vertices);
    EXPECT_EQ(out.params, p.params);
}

TEST(Reparametrize, CollapsesRepeatedVertices) {
    const Polyline p = path({{q(0), q(0)}, {q(1), q(0)}, {q(1), q(0)}, {q(3), q(0)}}, {q(0), q(1, 3), q(2, 3), q(1)});
    const Polyline out = reparametrize_constant_speed(p);
    EXPECT_EQ(out.vertices.size(), 3u);
    EXPECT_EQ(out.params, (std::vector<Rational>{q(0), q(1, 3), q(1)}));
    EXPECT_TRUE(is_geodesic(out, 7));
}

TEST(Reparametrize, IncommensurableChordsAreRoundedMonotonically) {
    const Polyline p = Polyline::uniform({{q(0), q(0)}, {q(1), q(0)}, {q(2), q(1)}});
    const Polyline out = reparametrize_constant_speed(p);
    const double want = 1.0 / (1.0 + std::sqrt(2.0));
    EXPECT_NEAR(to_double(out.params[1]), want, 1e-15);
    EXPECT_EQ(out.params.front(), q(0));
    EXPECT_EQ(out.params.back(), q(1));
}

TEST(Polyline, Validation) {
    EXPECT_THROW(path({{q(0)}, {q(1)}}, {q(0), q(0)}).validate(), ValidationError);
    EXPECT_THROW(path({{q(0)}, {q(1)}}, {q(1, 2), q(1)}).validate(), ValidationError);
    EXPECT_THROW(path({{q(0)}, {q(1), q(1)}}, {q(0), q(1)}).validate(), DimensionMismatch);
}

TEST(NearestMatching, UniqueAndAmbiguous) {
    const std::vector<Vec> to{{q(0), q(0)}, {q(1), q(0)}};
    EXPECT_EQ(nearest_matching({{q(1, 10), q(0)}, {q(9, 10), q(0)}}, to), (std::vector<std::size_t>{0, 1}));
    EXPECT_THROW(nearest_matching({{q(1, 2), q(0)}}, to), AmbiguityError);
    EXPECT_THROW(nearest_matching({{q(1, 10), q(0)}, {q(2, 10), q(0)}}, to), AmbiguityError);
}
