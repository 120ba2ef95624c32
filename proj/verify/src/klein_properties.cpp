#include "geoplan/verify/oracles.hpp"
#include "geoplan/verify/properties.hpp"

#include "geoplan/klein.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace geoplan::verify {

namespace {

const Rational kHalf(1, 2);

std::string show(const KleinPoint& x, const KleinPoint& y) {
    std::ostringstream os;
    os << "x=(" << to_string(x[0]) << "," << to_string(x[1]) << ") y=(" << to_string(y[0]) << "," << to_string(y[1]) << ")";
    return os.str();
}

std::string show(const KleinPoint& x) {
    return "(" + to_string(x[0]) + "," + to_string(x[1]) + ")";
}

KleinPoint random_point(Rng& rng) {
    return KleinPoint(rng.unit(1000), rng.unit(1000));
}

// Basepoints on the two special circles appear every fifth trial.
KleinPoint random_basepoint(Rng& rng, std::size_t trial) {
    if (trial % 5 == 0) return KleinPoint(rng.unit(1000), trial % 10 == 0 ? Rational(0) : kHalf);
    return random_point(rng);
}

bool special(const Rational& x2) {
    return x2 == 0 || x2 == kHalf;
}

std::vector<Vec> end_lifts(const std::vector<KleinGeodesic>& gs) {
    std::vector<Vec> out;
    for (const auto& g : gs) out.push_back(g.end_lift);
    return out;
}

// Targets spread over the strata: cut locus vertices, edge midpoints and generic points.
KleinPoint random_target(Rng& rng, const KleinPoint& x, std::size_t trial) {
    const auto c = klein_cut_locus(x);
    switch (trial % 3) {
    case 0: {
        const auto& v = c.vertices[rng.below(c.vertices.size())];
        return KleinPoint(v.point[0], v.point[1]);
    }
    case 1: {
        const auto& e = c.edges[rng.below(c.edges.size())];
        return KleinPoint::project(lerp(e.arc.front(), e.arc.back(), rng.between(Rational(1, 10), Rational(9, 10), 50)));
    }
    default:
        return random_point(rng);
    }
}

// Oracle domain from the multiplicity and membership in {x1 != 0}.
int oracle_domain(const KleinPoint& x, const KleinPoint& y) {
    const auto k = static_cast<int>(klein_orbit_minimum(x.coords(), y.coords()).lifts.size());
    if (k == 1) return 0;
    return x[0] != 0 ? k - 1 : k;
}

// Nearest point of the cut locus of x to y: on an edge when `on_edge`,
// otherwise the nearest vertex of multiplicity 3.
std::optional<KleinPoint> nearest_on_cut_locus(const KleinPoint& x, const KleinPoint& y, bool on_edge) {
    const auto c = klein_cut_locus(x);
    std::optional<KleinPoint> best;
    Rational best_d;
    auto offer = [&](const KleinPoint& q) {
        Rational d = klein_squared_distance(y, q);
        if (!best || d < best_d) {
            best = q;
            best_d = d;
        }
    };
    if (!on_edge) {
        for (const auto& v : c.vertices)
            if (v.multiplicity == 3) offer(KleinPoint(v.point[0], v.point[1]));
        return best;
    }
    const auto orbit = klein_lift_orbit(y, 2);
    for (const auto& e : c.edges) {
        const Vec& a = e.arc.front();
        const Vec& b = e.arc.back();
        const Vec ab = b - a;
        const Rational len = squared_norm(ab);
        for (const auto& o : orbit) {
            const Vec ap = o.point - a;
            Rational t = (ap[0] * ab[0] + ap[1] * ab[1]) / len;
            t = std::clamp(t, Rational(0), Rational(1));
            offer(KleinPoint::project(lerp(a, b, t)));
        }
    }
    return best;
}

bool within(const ExactLength& len, const Rational& bound) {
    if (auto sq = len.square()) return *sq <= bound * bound;
    return len.approx() <= to_double(bound);
}

} // namespace

PropertyResult klein_cut_locus_dichotomy(Rng& rng, std::size_t trials) {
    PropertyResult r{"klein cut locus is a wedge exactly on x2 in {0,1/2}, a theta graph otherwise"};
    for (std::size_t t = 0; t < trials; ++t) {
        const KleinPoint x = random_basepoint(rng, t);
        const auto c = klein_cut_locus(x);
        ++r.checked;
        const bool wedge = special(x[1]);
        if (wedge) {
            if (c.shape() != "wedge" || c.vertices.size() != 1 || c.vertices[0].multiplicity != 4 || c.edges.size() != 2)
                r.fail("expected a wedge at " + show(x) + ", got " + c.shape());
        } else {
            bool ok = c.shape() == "theta" && c.vertices.size() == 2 && c.edges.size() == 3;
            for (const auto& v : c.vertices) ok = ok && v.multiplicity == 3;
            for (const auto& e : c.edges) ok = ok && e.from != e.to;
            if (!ok) r.fail("expected a theta graph at " + show(x) + ", got " + c.shape());
        }
        for (const auto& v : c.vertices) {
            const auto m = klein_orbit_minimum(x.coords(), v.point);
            if (static_cast<int>(m.lifts.size()) != v.multiplicity)
                r.fail("vertex multiplicity " + std::to_string(v.multiplicity) + " but oracle finds " +
                       std::to_string(m.lifts.size()) + " at " + show(x));
        }
        for (const auto& e : c.edges) {
            const Vec mid = lerp(e.arc.front(), e.arc.back(), Rational(1, 3));
            if (klein_orbit_minimum(x.coords(), mid).lifts.size() != 2) r.fail("edge interior not of multiplicity 2 at " + show(x));
        }
    }
    return r;
}

PropertyResult klein_oracle_agreement(Rng& rng, std::size_t trials) {
    PropertyResult r{"klein geodesics agree with the word oracle"};
    for (std::size_t t = 0; t < trials; ++t) {
        const KleinPoint x = random_basepoint(rng, t);
        const KleinPoint y = random_target(rng, x, t);
        const auto gs = klein_geodesics(x, y);
        const auto m = klein_orbit_minimum(x.coords(), y.coords());
        ++r.checked;
        if (end_lifts(gs) != m.lifts || gs.front().squared_length != m.squared_distance) {
            r.fail("disagreement at " + show(x, y));
            continue;
        }
        for (const auto& g : gs) {
            if (g.deck.apply(y.coords()) != g.end_lift) r.fail("deck element does not map y to its lift at " + show(x, y));
            if (!is_geodesic(g.lift(), 5, 0)) r.fail("lift is not a geodesic at " + show(x, y));
        }
    }
    return r;
}

PropertyResult klein_window_sufficiency(Rng& rng, std::size_t trials) {
    PropertyResult r{"klein orbit window 2 loses nothing against window 4"};
    for (std::size_t t = 0; t < trials; ++t) {
        const KleinPoint x = random_basepoint(rng, t);
        const KleinPoint y = random_target(rng, x, t);
        ++r.checked;
        if (end_lifts(klein_geodesics(x, y, 2)) != end_lifts(klein_geodesics(x, y, 4))) r.fail("window 2 misses a lift at " + show(x, y));
    }
    return r;
}

PropertyResult klein_horizontal_equivariance(Rng& rng, std::size_t trials) {
    PropertyResult r{"horizontal translation preserves distance and multiplicity"};
    for (std::size_t t = 0; t < trials; ++t) {
        const KleinPoint x = random_basepoint(rng, t);
        const KleinPoint y = random_target(rng, x, t);
        const Rational s = rng.unit(1000);
        const KleinPoint xs = KleinPoint::project({x[0] + s, x[1]});
        const KleinPoint ys = KleinPoint::project({y[0] + s, y[1]});
        ++r.checked;
        const auto a = klein_geodesics(x, y), b = klein_geodesics(xs, ys);
        if (a.size() != b.size() || a.front().squared_length != b.front().squared_length)
            r.fail("translation by " + to_string(s) + " changes " + show(x, y));
    }
    return r;
}

PropertyResult klein_planner_partition(Rng& rng, std::size_t trials) {
    PropertyResult r{"klein planner domains partition K x K"};
    std::array<std::size_t, 5> hits{};
    for (std::size_t t = 0; t < trials; ++t) {
        KleinPoint x = random_basepoint(rng, t);
        if (t % 2 == 1) x = KleinPoint(0, x[1]);
        const KleinPoint y = random_target(rng, x, t / 2);
        ++r.checked;
        const auto plan = klein_plan(x, y);
        const int want = oracle_domain(x, y);
        if (plan.domain != want || klein_domain(x, y) != want) {
            r.fail("domain " + std::to_string(plan.domain) + " != " + std::to_string(want) + " at " + show(x, y));
            continue;
        }
        ++hits.at(static_cast<std::size_t>(want));
        const auto m = klein_orbit_minimum(x.coords(), y.coords());
        const auto& g = plan.geodesic;
        if (g.start_lift != x.coords() || !std::binary_search(m.lifts.begin(), m.lifts.end(), g.end_lift) ||
            g.squared_length != m.squared_distance)
            r.fail("section value is not a geodesic at " + show(x, y));
    }
    for (std::size_t d = 0; d < hits.size(); ++d)
        if (hits[d] == 0) r.fail("domain " + std::to_string(d) + " never sampled");
    return r;
}

PropertyResult klein_planner_continuity(Rng& rng, std::size_t trials, const Rational& delta, const Rational& tol) {
    PropertyResult r{"klein planner continuous within domain components"};
    const Rational step = delta / 4;
    for (std::size_t t = 0; t < trials; ++t) {
        // Pieces (k, x in A) for k = 1..4.
        const int k = static_cast<int>(t % 8) / 2 + 1;
        const bool in_a = t % 2 == 0;
        const Rational x1 = in_a ? rng.between(2 * delta, 1 - 2 * delta, 1000) : Rational(0);
        Rational x2 = rng.unit(1000);
        if (k == 4) x2 = rng.coin() ? Rational(0) : kHalf;
        if (k == 3 && special(x2)) continue;
        const KleinPoint x(x1, x2);
        const auto c = klein_cut_locus(x);

        KleinPoint y;
        if (k == 1) {
            y = random_point(rng);
            const auto m = klein_orbit_minimum(x.coords(), y.coords());
            if (m.lifts.size() != 1 || m.gap <= 8 * delta) continue;
        } else if (k == 2) {
            const auto& e = c.edges[rng.below(c.edges.size())];
            y = KleinPoint::project(lerp(e.arc.front(), e.arc.back(), rng.between(Rational(1, 4), Rational(3, 4), 100)));
            bool far = true;
            for (const auto& v : c.vertices) far = far && klein_squared_distance(y, KleinPoint(v.point[0], v.point[1])) > 16 * delta * delta;
            if (!far) continue;
        } else {
            std::vector<KleinPoint> vs;
            for (const auto& v : c.vertices)
                if (v.multiplicity == k) vs.emplace_back(v.point[0], v.point[1]);
            if (vs.empty()) {
                r.fail("no vertex of multiplicity " + std::to_string(k) + " at " + show(x));
                continue;
            }
            y = vs[rng.below(vs.size())];
        }

        // Nearby pair in the same component; shrink the move until it is within delta.
        Vec e{in_a ? rng.between(-step, step, 1000) : Rational(0), k == 4 ? Rational(0) : rng.between(-step, step, 1000)};
        std::optional<std::pair<KleinPoint, KleinPoint>> near;
        for (int attempt = 0; attempt < 12 && !near; ++attempt, e = kHalf * e) {
            const KleinPoint xp = KleinPoint::project(x.coords() + e);
            std::optional<KleinPoint> yp;
            if (k == 1) {
                yp = KleinPoint::project(y.coords() + Vec{rng.between(-step, step, 1000), rng.between(-step, step, 1000)});
            } else if (k == 4) {
                yp = KleinPoint::project(y.coords() + e); // horizontal translation is an isometry
            } else {
                yp = nearest_on_cut_locus(xp, y, k == 2);
            }
            if (!yp) break;
            if (klein_squared_distance(x, xp) + klein_squared_distance(y, *yp) <= delta * delta) near.emplace(xp, *yp);
        }
        if (!near) {
            r.fail("no nearby pair in the same component at " + show(x, y));
            continue;
        }
        const auto& [xp, yp] = *near;
        ++r.checked;
        const auto a = klein_plan(x, y), b = klein_plan(xp, yp);
        if (a.domain != b.domain) {
            r.fail("domain changed from " + show(x, y) + " to " + show(xp, yp));
            continue;
        }
        const auto jump = klein_sup_distance(a.geodesic, b.geodesic);
        if (!within(jump, tol)) r.fail("jump " + jump.decimal(6) + " from " + show(x, y) + " to " + show(xp, yp));
    }
    return r;
}

PropertyResult klein_monodromy_nontrivial(std::size_t steps) {
    PropertyResult r{"klein S4 loops have nontrivial order-2 monodromy"};
    for (const Rational& x2 : {Rational(0), kHalf}) {
        ++r.checked;
        const Permutation p = klein_monodromy(x2, steps);
        if (p.size() != 4 || p.is_identity() || p.order() != 2) r.fail("x2=" + to_string(x2) + " gives " + p.cycles());
    }
    return r;
}

PropertyResult klein_poset_composition() {
    PropertyResult r{"klein S4 poset is valid with bound 3"};
    const StratPoset p = klein_local_poset();
    ++r.checked;
    const auto v = validate_poset(p);
    if (!v.ok) r.fail("invalid: " + v.problems.front());
    else if (auto b = lower_bound(p); !b.lower_bound || *b.lower_bound != 3) r.fail("bound is not 3");
    return r;
}

} // namespace geoplan::verify
