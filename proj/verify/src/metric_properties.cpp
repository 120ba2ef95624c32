#include "geoplan/verify/oracles.hpp"
#include "geoplan/verify/properties.hpp"

#include "geoplan/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace geoplan::verify {

void PropertyResult::fail(const std::string& why) {
    if (failed++ == 0) first_failure = why;
}

namespace {

// Unit directions with rational length.
const std::array<std::array<long, 3>, 7> kPythagorean{{
    {1, 0, 1}, {0, 1, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29},
}};

Vec random_direction(Rng& rng) {
    const auto& t = kPythagorean[rng.below(kPythagorean.size())];
    Rational a(t[0], t[2]), b(t[1], t[2]);
    a.canonicalize();
    b.canonicalize();
    if (rng.coin()) std::swap(a, b);
    if (rng.coin()) a = -a;
    if (rng.coin()) b = -b;
    return {a, b};
}

Rational random_length(Rng& rng) {
    Rational l(rng.range(1, 30), rng.range(1, 12));
    l.canonicalize();
    return l;
}

std::vector<Rational> random_params(Rng& rng, std::size_t m) {
    std::vector<Rational> params;
    if (m == 1) return {Rational(0)};
    Rational acc = 0;
    std::vector<Rational> steps;
    for (std::size_t i = 1; i < m; ++i) {
        Rational s(rng.range(1, 20), rng.range(1, 7));
        s.canonicalize();
        steps.push_back(s);
        acc += s;
    }
    params.emplace_back(0);
    Rational run = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        run += steps[i];
        params.push_back(run / acc);
    }
    params.emplace_back(1);
    return params;
}

struct RandomPath {
    Polyline path;
    bool straight = false;
};

// Chords of rational length, so cumulative fractions are rational; some
// paths repeat vertices and some are straight segments with interior vertices.
RandomPath random_path(Rng& rng) {
    RandomPath r;
    const std::size_t m = static_cast<std::size_t>(rng.range(1, 10));
    r.straight = rng.below(3) == 0;
    Vec start{rng.between(-5, 5, 20), rng.between(-5, 5, 20)};
    Vec dir = random_direction(rng);
    r.path.vertices.push_back(start);
    for (std::size_t i = 1; i < m; ++i) {
        if (!r.straight) dir = random_direction(rng);
        if (rng.below(8) == 0) {
            r.path.vertices.push_back(r.path.vertices.back());
            continue;
        }
        r.path.vertices.push_back(r.path.vertices.back() + random_length(rng) * dir);
    }
    r.path.params = random_params(rng, m);
    r.path.chart = "plane";
    return r;
}

std::string show(const Polyline& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        os << "(";
        for (std::size_t j = 0; j < p.vertices[i].size(); ++j) os << (j ? "," : "") << to_string(p.vertices[i][j]);
        os << ")@" << to_string(p.params[i]) << " ";
    }
    return os.str();
}

} // namespace

PropertyResult reparametrization_exact(Rng& rng, std::size_t trials) {
    PropertyResult r{"reparametrization exact, idempotent, endpoint preserving"};
    for (std::size_t t = 0; t < trials; ++t) {
        auto [p, straight] = random_path(rng);
        ++r.checked;
        const Polyline out = reparametrize_constant_speed(p);

        // Independent expectation from exact chord roots.
        std::vector<Vec> distinct;
        for (const auto& v : p.vertices)
            if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
        std::vector<Rational> cumulative{Rational(0)};
        for (std::size_t i = 1; i < distinct.size(); ++i)
            cumulative.push_back(cumulative.back() + *exact_sqrt(squared_distance(distinct[i - 1], distinct[i])));
        const Rational total = cumulative.back();

        if (total == 0) {
            if (out.vertices != p.vertices || out.params != p.params) r.fail("constant path changed: " + show(p));
            continue;
        }
        std::vector<Rational> expected;
        for (const auto& c : cumulative) expected.push_back(c / total);
        if (out.vertices != distinct || out.params != expected) {
            r.fail("fractions differ: " + show(p) + " -> " + show(out));
            continue;
        }
        const Polyline twice = reparametrize_constant_speed(out);
        if (twice.vertices != out.vertices || twice.params != out.params) r.fail("not idempotent: " + show(p));
        if (out.at(0) != p.at(0) || out.at(1) != p.at(1)) r.fail("endpoints moved: " + show(p));
        if (!(path_length(out) == path_length(p))) r.fail("length changed: " + show(p));
        if (straight && !is_geodesic(out, 9, 0)) r.fail("straight output not geodesic: " + show(out));
    }
    return r;
}

PropertyResult straight_segments_geodesic(Rng& rng, std::size_t trials) {
    PropertyResult r{"straight segments: geodesic iff constant speed"};
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.range(2, 8));
        Vec a{rng.between(-3, 3, 50), rng.between(-3, 3, 50)};
        Vec b{rng.between(-3, 3, 50), rng.between(-3, 3, 50)};
        if (a == b) b[0] += 1;
        // Interior vertices at increasing fractions along [a, b].
        std::vector<Rational> where = random_params(rng, m);
        Polyline p;
        p.chart = "plane";
        for (const auto& s : where) p.vertices.push_back(lerp(a, b, s));
        p.params = random_params(rng, m);
        ++r.checked;
        const Polyline out = reparametrize_constant_speed(p);
        if (!is_geodesic(out, 11, 0)) r.fail("reparametrized segment not geodesic: " + show(out));
        if (out.params != where) r.fail("fractions differ from vertex positions: " + show(out));
        const bool constant_speed = p.params == where;
        if (is_geodesic(p, 11, 0) != constant_speed) r.fail("is_geodesic wrong on " + show(p));
    }
    return r;
}

PropertyResult sup_distance_metric(Rng& rng, std::size_t trials) {
    PropertyResult r{"sup distance symmetric, triangle inequality, exact on merged grid"};
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.range(2, 6));
        const auto params = random_params(rng, m);
        auto make = [&] {
            Polyline p;
            p.chart = "plane";
            p.params = params;
            for (std::size_t i = 0; i < m; ++i) p.vertices.push_back({rng.between(-2, 2, 30), rng.between(-2, 2, 30)});
            return p;
        };
        const Polyline p = make(), q = make(), s = make();
        ++r.checked;
        const Rational pq = sup_distance_squared(p, q), qp = sup_distance_squared(q, p);
        const Rational qs = sup_distance_squared(q, s), ps = sup_distance_squared(p, s);
        if (pq != qp) r.fail("not symmetric: " + show(p) + " / " + show(q));
        // sqrt(ps) <= sqrt(pq) + sqrt(qs), compared exactly on squares.
        const Rational excess = ps - pq - qs;
        if (excess > 0 && excess * excess > 4 * pq * qs) r.fail("triangle inequality fails");
        if (sup_distance_squared(p, p) != 0) r.fail("d(p,p) != 0");
        // A dense grid never exceeds the breakpoint maximum.
        for (long i = 0; i <= 200; ++i) {
            Rational u(i, 200);
            u.canonicalize();
            if (squared_distance(p.at(u), q.at(u)) > pq) {
                r.fail("grid point exceeds sup: " + show(p) + " / " + show(q));
                break;
            }
        }
    }
    return r;
}

PropertyResult length_partition_supremum(Rng& rng, std::size_t trials) {
    PropertyResult r{"length is the supremum over partitions"};
    for (std::size_t t = 0; t < trials; ++t) {
        auto [p, straight] = random_path(rng);
        (void)straight;
        const long double length = path_length(p).approx();
        ++r.checked;
        for (int k = 0; k < 20; ++k) {
            std::vector<Rational> partition{Rational(0)};
            const std::size_t pieces = static_cast<std::size_t>(rng.range(1, 30));
            std::vector<Rational> cuts;
            for (std::size_t i = 0; i < pieces; ++i) cuts.push_back(rng.unit(10000));
            std::sort(cuts.begin(), cuts.end());
            partition.insert(partition.end(), cuts.begin(), cuts.end());
            partition.emplace_back(1);
            if (partition_sum(p, partition) > length * (1 + 1e-15L) + 1e-15L)
                r.fail("a partition beats the length: " + show(p));
        }
        std::vector<Rational> breakpoints = p.params;
        if (breakpoints.size() == 1) breakpoints.emplace_back(1);
        const long double at_breaks = partition_sum(p, breakpoints);
        if (std::fabs(static_cast<double>(at_breaks - length)) > 1e-12 * (1 + static_cast<double>(length)))
            r.fail("breakpoint partition misses the length: " + show(p));
    }
    return r;
}

} // namespace geoplan::verify
