#include "geoplan/verify/oracles.hpp"
#include "geoplan/verify/properties.hpp"

#include "geoplan/torus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace geoplan::verify {

namespace {

std::string show(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ")";
    return os.str();
}

const Rational kHalf(1, 2);

// A coordinate difference that is not 1/2 mod 1.
Rational generic_offset(Rng& rng) {
    Rational d;
    do d = rng.unit(1000);
    while (d == kHalf);
    return d;
}

// Pair with exactly `antipodal` coordinates (chosen at random) differing by 1/2.
std::pair<TorusPoint, TorusPoint> pair_in_stratum(Rng& rng, std::size_t n, std::size_t antipodal) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rng.unit(1000);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t i = idx[r];
        y[i] = x[i] + (r < antipodal ? kHalf : generic_offset(rng));
    }
    return {TorusPoint(x), TorusPoint(y)};
}

std::vector<Vec> displacements(const std::vector<TorusGeodesic>& gs) {
    std::vector<Vec> out;
    for (const auto& g : gs) out.push_back(g.displacement);
    return out;
}

// Checks one pair against the lattice oracle and returns the oracle stratum.
void check_pair(PropertyResult& r, const TorusPoint& x, const TorusPoint& y, std::size_t want_k) {
    const auto oracle = torus_lattice_minimizers(x.coords(), y.coords());
    const auto gs = torus_geodesics(x, y);
    const int k = torus_stratum(x, y);
    ++r.checked;
    if (static_cast<std::size_t>(k) != want_k) r.fail("stratum " + std::to_string(k) + " at " + show(x.coords()) + show(y.coords()));
    if (gs.size() != (std::size_t{1} << (k - 1))) r.fail("count " + std::to_string(gs.size()) + " at " + show(x.coords()) + show(y.coords()));
    if (displacements(gs) != oracle) r.fail("oracle disagrees at " + show(x.coords()) + show(y.coords()));
}

// Domain predicate from the oracle alone: a coordinate is antipodal exactly
// when two of its five nearby lifts tie for nearest.
int oracle_domain(const Vec& x, const Vec& y) {
    int ties = 0;
    for (std::size_t i = 0; i < x.size(); ++i) ties += torus_lattice_minimizers({x[i]}, {y[i]}).size() == 2 ? 1 : 0;
    return ties;
}

void check_plan(PropertyResult& r, std::vector<std::size_t>& hits, const TorusPoint& x, const TorusPoint& y) {
    ++r.checked;
    const auto plan = torus_plan(x, y);
    const int want = oracle_domain(x.coords(), y.coords());
    if (plan.domain != want) {
        r.fail("domain " + std::to_string(plan.domain) + " != " + std::to_string(want) + " at " + show(x.coords()) + show(y.coords()));
        return;
    }
    ++hits.at(static_cast<std::size_t>(plan.domain));
    const auto oracle = torus_lattice_minimizers(x.coords(), y.coords());
    if (!std::binary_search(oracle.begin(), oracle.end(), plan.geodesic.displacement))
        r.fail("section value is not a geodesic at " + show(x.coords()) + show(y.coords()));
    if (!(plan.geodesic.start == x) || TorusPoint(x.coords() + plan.geodesic.displacement) != y)
        r.fail("section endpoints wrong at " + show(x.coords()) + show(y.coords()));
}

void require_all_domains(PropertyResult& r, const std::vector<std::size_t>& hits) {
    for (std::size_t d = 0; d < hits.size(); ++d)
        if (hits[d] == 0) r.fail("domain " + std::to_string(d) + " never sampled");
}

bool within(const ExactLength& len, const Rational& bound) {
    if (auto sq = len.square()) return *sq <= bound * bound;
    return len.approx() <= to_double(bound);
}

} // namespace

PropertyResult torus_count_law(Rng& rng, std::size_t n, std::size_t trials) {
    PropertyResult r{"torus count law n=" + std::to_string(n)};
    for (std::size_t t = 0; t < trials; ++t) {
        // Even coverage of the strata; uniform pairs would almost never be antipodal.
        const std::size_t antipodal = t % (n + 1);
        auto [x, y] = pair_in_stratum(rng, n, antipodal);
        check_pair(r, x, y, antipodal + 1);
    }
    return r;
}

PropertyResult torus_partition_grid(Rng& rng, std::size_t n, long grid) {
    PropertyResult r{"torus planner partitions the grid n=" + std::to_string(n)};
    std::vector<std::size_t> hits(n + 1, 0);
    const Vec base = [&] {
        Vec b(n);
        for (auto& c : b) c = rng.unit(1000);
        return b;
    }();
    // The grid runs over the first two coordinate differences; further
    // coordinates follow g1 + 2 g2, which meets every antipodal pattern.
    // On the circle the second grid axis moves the basepoint instead.
    for (long g1 = 0; g1 < grid; ++g1)
        for (long g2 = 0; g2 < grid; ++g2) {
            Vec x = base;
            if (n == 1) x[0] = base[0] + Rational(g2, grid);
            Vec d(n);
            for (std::size_t i = 0; i < n; ++i) {
                long num = i == 0 ? g1 : i == 1 ? g2 : g1 + 2 * g2;
                d[i] = Rational(num, grid);
                d[i].canonicalize();
            }
            check_plan(r, hits, TorusPoint(x), TorusPoint(x + d));
        }
    if (grid % 2 == 0) require_all_domains(r, hits);
    return r;
}

PropertyResult torus_partition_random(Rng& rng, std::size_t n, std::size_t trials) {
    PropertyResult r{"torus planner partitions random pairs n=" + std::to_string(n)};
    std::vector<std::size_t> hits(n + 1, 0);
    for (std::size_t t = 0; t < trials; ++t) {
        auto [x, y] = pair_in_stratum(rng, n, t % (n + 1));
        check_plan(r, hits, x, y);
    }
    require_all_domains(r, hits);
    return r;
}

PropertyResult torus_continuity(Rng& rng, std::size_t n, std::size_t trials, const Rational& delta) {
    PropertyResult r{"torus planner continuous within each domain n=" + std::to_string(n)};
    const Rational step = delta / (2 * static_cast<long>(n));
    const Rational margin = kHalf - 2 * delta;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t antipodal = t % (n + 1);
        auto [x, y] = pair_in_stratum(rng, n, antipodal);
        // Keep the generic coordinates well away from the antipodal value so
        // the nearby pair stays in the same path component of the domain.
        Vec xc = x.coords(), yc = y.coords();
        bool ok = true;
        std::vector<bool> anti(n);
        for (std::size_t i = 0; i < n; ++i) {
            anti[i] = torus_antipodal(xc[i], yc[i]);
            Rational c = frac(yc[i] - xc[i] + kHalf) - kHalf;
            if (!anti[i] && abs(c) >= margin) ok = false;
        }
        if (!ok) continue;
        Vec x2 = xc, y2 = yc;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational ex = rng.between(-step, step, 1000);
            const Rational ey = anti[i] ? ex : rng.between(-step, step, 1000);
            x2[i] += ex;
            y2[i] += ey;
        }
        const TorusPoint xp(x2), yp(y2);
        ++r.checked;
        const auto a = torus_plan(x, y), b = torus_plan(xp, yp);
        if (a.domain != b.domain) {
            r.fail("domain changed at " + show(xc) + show(yc));
            continue;
        }
        if (!within(torus_sup_distance(a.geodesic, b.geodesic), 4 * delta))
            r.fail("jump " + torus_sup_distance(a.geodesic, b.geodesic).decimal(6) + " at " + show(xc) + show(yc));
    }
    return r;
}

PropertyResult torus_subtorus_convexity(Rng& rng, std::size_t trials) {
    PropertyResult r{"geodesics stay in coordinate subtori"};
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
        auto [x, y] = pair_in_stratum(rng, n, rng.below(n));
        Vec yc = y.coords();
        const std::size_t fixed = rng.below(n);
        yc[fixed] = x[fixed];
        const TorusPoint y2(yc);
        ++r.checked;
        for (const auto& g : torus_geodesics(x, y2))
            if (g.displacement[fixed] != 0) r.fail("leaves subtorus at " + show(x.coords()) + show(yc));
    }
    return r;
}

PropertyResult torus_local_poset_structure(std::size_t n) {
    PropertyResult r{"torus corner poset n=" + std::to_string(n)};
    const StratPoset p = torus_local_poset(n);
    ++r.checked;
    if (!validate_poset(p).ok) r.fail("invalid poset");
    // Faces of the n-cube: C(n, l-1) 2^(n-l+1) at level l.
    for (std::size_t level = 1; level <= n + 1; ++level) {
        std::size_t choose = 1;
        for (std::size_t i = 0; i < level - 1; ++i) choose = choose * (n - i) / (i + 1);
        const std::size_t want = choose << (n - level + 1);
        const auto got = static_cast<std::size_t>(std::count_if(
            p.elements.begin(), p.elements.end(), [&](const PosetElement& e) { return e.level == static_cast<int>(level); }));
        if (got != want) r.fail("level " + std::to_string(level) + " has " + std::to_string(got));
    }
    const auto b = lower_bound(p);
    if (!b.lower_bound || *b.lower_bound != static_cast<int>(n)) r.fail("lower bound not n");
    return r;
}

PropertyResult torus_monodromy_control(std::size_t steps) {
    PropertyResult r{"torus loop monodromy is trivial"};
    for (std::size_t n = 1; n <= 3; ++n) {
        ++r.checked;
        const Permutation p = torus_monodromy(n, steps);
        if (p.size() != (std::size_t{1} << n) || !p.is_identity()) r.fail("n=" + std::to_string(n) + " gives " + p.cycles());
    }
    return r;
}

} // namespace geoplan::verify
