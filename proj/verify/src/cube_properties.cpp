#include "geoplan/verify/properties.hpp"

#include "geoplan/cube.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace geoplan::verify {

namespace {

const Rational kHalf(1, 2);

// Squared lengths of the twelve candidate paths between opposite faces,
// written out independently of the unfolding code.
std::array<Rational, 12> formula_lengths(const Vec& x, const Vec& y) {
    const Rational &x1 = x[0], &x2 = x[1], &y1 = y[0], &y2 = y[1];
    auto sq = [](const Rational& a, const Rational& b) { return Rational(a * a + b * b); };
    return {
        sq(x1 - y1, 2 - x2 + y2),     sq(1 - x1 + y2, 2 - x2 - y1), sq(1 - x2 - y1, 2 - x1 + y2),
        sq(x2 + y2, 2 - x1 - y1),     sq(1 + x2 - y1, 2 - x1 - y2), sq(1 - x1 - y2, 2 + x2 - y1),
        sq(x1 - y1, 2 + x2 - y2),     sq(1 + x1 - y2, 2 + x2 + y1), sq(1 + x2 + y1, 2 + x1 - y2),
        sq(x2 + y2, 2 + x1 + y1),     sq(1 - x2 + y1, 2 + x1 + y2), sq(1 + x1 + y2, 2 - x2 + y1),
    };
}

std::array<Rational, 12> formula_normalized(const Vec& x, const Vec& y) {
    const Rational &x1 = x[0], &x2 = x[1], &y1 = y[0], &y2 = y[1];
    return {
        -x1 * y1 - 2 * x2 + 2 * y2 - x2 * y2,
        kHalf - x1 + y2 - x1 * y2 - 2 * x2 - 2 * y1 + x2 * y1,
        kHalf - x2 - y1 + x2 * y1 - 2 * x1 + 2 * y2 - x1 * y2,
        x2 * y2 - 2 * x1 - 2 * y1 + x1 * y1,
        kHalf + x2 - y1 - x2 * y1 - 2 * x1 - 2 * y2 + x1 * y2,
        kHalf - x1 - y2 + x1 * y2 + 2 * x2 - 2 * y1 - x2 * y1,
        -x1 * y1 + 2 * x2 - 2 * y2 - x2 * y2,
        kHalf + x1 - y2 - x1 * y2 + 2 * x2 + 2 * y1 + x2 * y1,
        kHalf + x2 + y1 + x2 * y1 + 2 * x1 - 2 * y2 - x1 * y2,
        x2 * y2 + 2 * x1 + 2 * y1 + x1 * y1,
        kHalf - x2 + y1 - x2 * y1 + 2 * x1 + 2 * y2 + x1 * y2,
        kHalf + x1 + y2 + x1 * y2 - 2 * x2 + 2 * y1 - x2 * y1,
    };
}

std::array<Rational, 12> formula_diagonal(const Rational& xd, const Rational& yd) {
    const Rational d = xd - yd, p = xd * yd, s = xd + yd;
    return {
        2 * d, kHalf + 3 * d - 2 * p, kHalf + 3 * d - 2 * p, 2 * d,
        kHalf + s + 2 * p, kHalf - s + 2 * p, -2 * d, kHalf - 3 * d - 2 * p,
        kHalf - 3 * d - 2 * p, -2 * d, kHalf - s + 2 * p, kHalf + s + 2 * p,
    };
}

// Open interval (-1/2, 1/2).
Rational inside(Rng& rng) {
    Rational v;
    do v = rng.between(-kHalf, kHalf, 1000);
    while (v == -kHalf);
    return v;
}

std::string show(const Vec& x, const Vec& y) {
    std::ostringstream os;
    os << "x=(" << to_string(x[0]) << "," << to_string(x[1]) << ") y=(" << to_string(y[0]) << "," << to_string(y[1]) << ")";
    return os.str();
}

std::string show(const CubePoint& p) {
    return face_name(p.face()) + "(" + to_string(p.u()) + "," + to_string(p.v()) + ")";
}

std::set<std::string> labels(const std::vector<UnfoldedPath>& paths) {
    std::set<std::string> out;
    for (const auto& p : paths) out.insert(p.label());
    return out;
}

std::string join(const std::set<std::string>& s) {
    std::string out;
    for (const auto& l : s) out += (out.empty() ? "" : ",") + l;
    return "{" + out + "}";
}

CubePoint random_surface_point(Rng& rng) {
    return CubePoint(kAllFaces[rng.below(6)], inside(rng), inside(rng));
}

// Argmin labels of the formula lengths over the admissible candidates.
std::set<std::string> formula_argmin(const Vec& x, const Vec& y, Rational* best_out = nullptr) {
    const auto L = formula_lengths(x, y);
    const CubePoint px(Face::zm, x[0], x[1]), py(Face::zp, y[0], y[1]);
    std::optional<Rational> best;
    std::set<std::string> arg;
    for (int i = 0; i < 12; ++i) {
        if (!unfold(candidate_sequence('A', i + 1), px, py)) continue;
        if (!best || L[i] < *best) {
            best = L[i];
            arg.clear();
        }
        if (L[i] == *best) arg.insert("A" + std::to_string(i + 1));
    }
    if (best_out && best) *best_out = *best;
    return arg;
}

} // namespace

PropertyResult cube_normalization_identity(Rng& rng, std::size_t trials) {
    PropertyResult r{"L_i^2 = 2 N_i + (|x|^2 + |y|^2 + 4)"};
    for (std::size_t t = 0; t < trials; ++t) {
        const Vec x{inside(rng), inside(rng)}, y{inside(rng), inside(rng)};
        const auto table = opposite_face_table(x, y);
        const auto L = formula_lengths(x, y);
        const auto N = formula_normalized(x, y);
        const Rational common = squared_norm(x) + squared_norm(y) + 4;
        ++r.checked;
        if (table.common != common) r.fail("common summand differs at " + show(x, y));
        for (int i = 0; i < 12; ++i) {
            if (L[i] != 2 * N[i] + common) r.fail("identity fails for A" + std::to_string(i + 1) + " at " + show(x, y));
            if (table.L_sq[i] != L[i] || table.N[i] != N[i]) r.fail("table differs for A" + std::to_string(i + 1) + " at " + show(x, y));
            const auto u = unfold(candidate_sequence('A', i + 1), CubePoint(Face::zm, x[0], x[1]), CubePoint(Face::zp, y[0], y[1]));
            if (u.has_value() != table.admissible[i]) r.fail("admissibility differs for A" + std::to_string(i + 1) + " at " + show(x, y));
            if (u && u->squared_length != L[i]) r.fail("unfolding length differs for A" + std::to_string(i + 1) + " at " + show(x, y));
        }
        for (int i : {0, 3, 6, 9})
            if (!table.admissible[i]) r.fail("A" + std::to_string(i + 1) + " not admissible at " + show(x, y));
    }
    return r;
}

PropertyResult cube_formula_oracle(Rng& rng, std::size_t trials) {
    PropertyResult r{"formula minimum and argmin match the unfolding search"};
    for (std::size_t t = 0; t < trials; ++t) {
        Vec x{inside(rng), inside(rng)}, y{inside(rng), inside(rng)};
        // Every third pair sits on the diagonals, where ties are common.
        if (t % 3 == 0) {
            const Rational xd = rng.between(0, kHalf, 20), yd = rng.coin() ? xd : rng.between(0, kHalf, 20);
            if (xd == 0 || yd == 0) continue;
            x = {-xd, -xd};
            y = {yd, -yd};
        }
        Rational best;
        const auto want = formula_argmin(x, y, &best);
        const auto got = cube_geodesics(CubePoint(Face::zm, x[0], x[1]), CubePoint(Face::zp, y[0], y[1]));
        ++r.checked;
        if (got.empty() || got.front().squared_length != best || labels(got) != want)
            r.fail("formula " + join(want) + " vs search " + join(labels(got)) + " at " + show(x, y));
    }
    return r;
}

PropertyResult cube_diagonal_substitution(Rng& rng, std::size_t trials) {
    PropertyResult r{"diagonal N_i match the substituted general formulas"};
    for (std::size_t t = 0; t < trials; ++t) {
        const Rational xd = rng.between(0, kHalf, 1000), yd = rng.between(0, kHalf, 1000);
        if (xd == 0 || yd == 0) continue;
        ++r.checked;
        const auto table = diagonal_table(xd, yd);
        const auto want = formula_diagonal(xd, yd);
        const auto general = formula_normalized({-xd, -xd}, {yd, -yd});
        if (table != want || general != want) r.fail("mismatch at xd=" + to_string(xd) + " yd=" + to_string(yd));
    }
    return r;
}

PropertyResult cube_symmetric_diagonal(const std::vector<Rational>& zs) {
    PropertyResult r{"symmetric diagonal pairs have exactly four geodesics"};
    const std::set<std::string> want{"A1", "A4", "A7", "A10"};
    for (const auto& z : zs) {
        ++r.checked;
        const auto got = cube_geodesics(CubePoint(Face::zm, -z, -z), CubePoint(Face::zp, z, -z));
        if (got.size() != 4 || labels(got) != want) r.fail("z=" + to_string(z) + " gives " + join(labels(got)));
        const auto N = formula_diagonal(z, z);
        for (int i = 0; i < 12; ++i) {
            const bool zero = i % 3 == 0;
            if (zero ? N[i] != 0 : N[i] <= 0) r.fail("z=" + to_string(z) + " N_" + std::to_string(i + 1) + " has the wrong sign");
        }
    }
    return r;
}

PropertyResult cube_corner_structure() {
    PropertyResult r{"opposite corners have six geodesics of squared length 5"};
    ++r.checked;
    const auto gs = cube_geodesics(cube_corner_p(), cube_corner_q());
    const std::set<std::string> want{"D1", "D2", "D3", "D4", "D5", "D6"};
    if (gs.size() != 6 || labels(gs) != want) r.fail("got " + join(labels(gs)));
    for (const auto& g : gs) {
        if (g.squared_length != 5) r.fail(g.label() + " has squared length " + to_string(g.squared_length));
        if (!(path_length(g.surface_polyline()) == ExactLength::sqrt_of(5))) r.fail(g.label() + " trace length is not sqrt(5)");
    }
    const auto cg = corner_geodesics();
    for (std::size_t i = 0; i < cg.size(); ++i)
        if (cg[i].label() != "D" + std::to_string(i + 1)) r.fail("corner_geodesics out of order");
    // Longer searches find nothing shorter.
    const auto six = cube_geodesics(cube_corner_p(), cube_corner_q(), 6);
    if (six.size() != 6 || six.front().squared_length != 5) r.fail("six-face search changes the corner geodesics");
    return r;
}

PropertyResult cube_witnesses(int max_i, int max_j) {
    PropertyResult r{"witness sequences reproduce their preimage sets"};
    const std::set<std::string> s_want{"A1", "A4", "A7", "A10"}, rI{"A1", "A4"}, rII{"A7", "A10"}, tI{"A1"}, tII{"A4"};
    for (int i = 1; i <= max_i; ++i)
        for (int j = 1; j <= max_j; ++j) {
            const int k1 = witness_min_k(i, j, false), k2 = witness_min_k(i, j, true);
            const Rational f(1, 5 * i), g(1, 5 * j);
            // Coordinates written out from the sequence definitions.
            const Vec y{kHalf - f, -kHalf + f};
            const Vec s{-kHalf + f, -kHalf + f}, rI_x{-kHalf + f + g, -kHalf + f + g}, rII_x{-kHalf + f - g, -kHalf + f - g};
            for (int k : {k1, k1 + 1, k1 + 7, k2, k2 + 3}) {
                ++r.checked;
                const Rational e(1, 100 * k);
                const std::string at = " at i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
                const WitnessSet w = witness_sequences(i, j, k);
                auto check = [&](const WitnessPair& p, const Vec& x, const std::set<std::string>& want) {
                    if (!(p.x == CubePoint(Face::zm, x[0], x[1])) || !(p.y == CubePoint(Face::zp, y[0], y[1])))
                        r.fail(p.name + " has the wrong coordinates" + at);
                    const std::set<std::string> got(p.geodesics.begin(), p.geodesics.end());
                    if (got != want) r.fail(p.name + " gives " + join(got) + at);
                    if (formula_argmin(x, y) != want) r.fail(p.name + " formula oracle gives " + join(formula_argmin(x, y)) + at);
                };
                check(w.s, s, s_want);
                check(w.r_I, rI_x, rI);
                if (j > i) {
                    if (!w.r_II) r.fail("r_II missing" + at);
                    else check(*w.r_II, rII_x, rII);
                } else if (w.r_II) {
                    r.fail("r_II present outside the face" + at);
                }
                if (k >= k1) check(w.t_I, {rI_x[0], rI_x[1] + e}, tI);
                if (k >= k2) check(w.t_II, {rI_x[0] + e, rI_x[1]}, tII);
            }
            // The bound is sharp unless it is already 1.
            const auto below = [&](int k, bool second) {
                const auto w = witness_sequences(i, j, k);
                const auto& p = second ? w.t_II : w.t_I;
                return std::set<std::string>(p.geodesics.begin(), p.geodesics.end()) != (second ? tII : tI);
            };
            if (k1 > 1 && !below(k1 - 1, false)) r.fail("k for t_I is not minimal at i=" + std::to_string(i) + " j=" + std::to_string(j));
            if (k2 > 1 && !below(k2 - 1, true)) r.fail("k for t_II is not minimal at i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    return r;
}

PropertyResult cube_rotation_symmetry(Rng& rng, std::size_t trials) {
    PropertyResult r{"rotation about the corner axis permutes the geodesics"};
    for (std::size_t t = 0; t < trials; ++t) {
        CubePoint x, y;
        const bool opposite = t % 2 == 0;
        if (opposite) {
            x = CubePoint(Face::zm, inside(rng), inside(rng));
            y = CubePoint(Face::zp, inside(rng), inside(rng));
        } else {
            x = random_surface_point(rng);
            y = random_surface_point(rng);
        }
        const auto base = cube_geodesics(x, y);
        for (int times : {1, 2}) {
            ++r.checked;
            const auto rx = rotate_about_corners(x, times), ry = rotate_about_corners(y, times);
            if (!(rx.position() == rotate_about_corners(x.position(), times))) r.fail("point rotation disagrees with position rotation");
            const auto rot = cube_geodesics(rx, ry);
            if (rot.size() != base.size() || rot.front().squared_length != base.front().squared_length) {
                r.fail("rotation changes geodesics at " + show(x) + " " + show(y));
                continue;
            }
            std::set<std::vector<Vec>> want, got;
            for (const auto& g : base) {
                std::vector<Vec> trace;
                for (const auto& p : g.trace) trace.push_back(rotate_about_corners(p, times));
                want.insert(trace);
            }
            for (const auto& g : rot) got.insert(g.trace);
            if (want != got) r.fail("rotated traces differ at " + show(x) + " " + show(y));
            if (opposite) {
                // A -> C under one turn, A -> B under two.
                const char family = times == 1 ? 'C' : 'B';
                std::set<std::string> mapped;
                for (const auto& l : labels(base)) mapped.insert(family + l.substr(1));
                if (labels(rot) != mapped) r.fail("labels " + join(labels(rot)) + " expected " + join(mapped));
            }
        }
    }
    return r;
}

PropertyResult cube_face_bound_stability(Rng& rng, std::size_t trials) {
    PropertyResult r{"six-face search agrees with the five-face default"};
    for (std::size_t t = 0; t < trials; ++t) {
        const CubePoint x = random_surface_point(rng), y = random_surface_point(rng);
        ++r.checked;
        const auto a = cube_geodesics(x, y, 5), b = cube_geodesics(x, y, 6);
        std::set<std::vector<Vec>> ta, tb;
        for (const auto& g : a) ta.insert(g.trace);
        for (const auto& g : b) tb.insert(g.trace);
        if (a.empty() || a.front().squared_length != b.front().squared_length || ta != tb)
            r.fail("face bound changes geodesics at " + show(x) + " " + show(y));
    }
    return r;
}

PropertyResult cube_corner_convergence() {
    PropertyResult r{"diagonal geodesics converge to the tabulated corner geodesics"};
    const auto corners = corner_geodesics();
    const auto& table = corner_limit_table();
    for (int times : {0, 2, 1}) {
        const char family = times == 0 ? 'A' : times == 2 ? 'B' : 'C';
        std::map<std::string, long double> previous;
        for (long n : {10L, 100L, 1000L}) {
            const Rational z = kHalf - Rational(1, n);
            const CubePoint x = rotate_about_corners(CubePoint(Face::zm, -z, -z), times);
            const CubePoint y = rotate_about_corners(CubePoint(Face::zp, z, -z), times);
            const auto gs = cube_geodesics(x, y);
            ++r.checked;
            if (gs.size() != 4) {
                r.fail(std::string(1, family) + " family has " + std::to_string(gs.size()) + " geodesics at n=" + std::to_string(n));
                continue;
            }
            for (const auto& g : gs) {
                const std::string l = g.label();
                if (l.empty() || l[0] != family) {
                    r.fail("unexpected label " + l);
                    continue;
                }
                std::string nearest;
                long double best = 0;
                int ties = 0;
                for (const auto& c : corners) {
                    const long double d = sup_distance(g.surface_polyline(), c.surface_polyline(), 64).approx();
                    if (nearest.empty() || d < best - 1e-12L) {
                        nearest = c.label();
                        best = d;
                        ties = 0;
                    } else if (d < best + 1e-12L) {
                        ++ties;
                    }
                }
                if (ties > 0 || nearest != table.at(l)) r.fail(l + " approaches " + nearest + " instead of " + table.at(l));
                if (previous.count(l) && !(best < previous[l])) r.fail(l + " does not get closer at n=" + std::to_string(n));
                previous[l] = best;
            }
        }
    }
    return r;
}

} // namespace geoplan::verify
