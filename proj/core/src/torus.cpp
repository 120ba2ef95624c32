#include "geoplan/torus.hpp"

#include "geoplan/errors.hpp"

#include <algorithm>
#include <bit>

namespace geoplan {
namespace {

const Rational kHalf(1, 2);

void require_same_dimension(const TorusPoint& x, const TorusPoint& y) {
    if (x.dimension() != y.dimension())
        throw DimensionMismatch("torus points of dimension " + std::to_string(x.dimension()) + " and " +
                                std::to_string(y.dimension()));
}

// Representative of d mod 1 in [-1/2, 1/2).
Rational centered(const Rational& d) {
    Rational f = frac(d);
    if (f >= kHalf) f -= 1;
    return f;
}

Vec reduced(const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = frac(v[i]);
    return out;
}

} // namespace

TorusPoint::TorusPoint(Vec coords) : coords_(reduced(coords)) {
    if (coords_.empty()) throw ValidationError("torus point needs at least one coordinate");
}

Polyline TorusGeodesic::lift() const {
    return Polyline::uniform({start.coords(), start.coords() + displacement}, "torus-cover");
}

bool torus_antipodal(const Rational& x, const Rational& y) {
    Rational d = y - x - kHalf;
    return d.get_den() == 1;
}

int torus_stratum(const TorusPoint& x, const TorusPoint& y) {
    require_same_dimension(x, y);
    int k = 1;
    for (std::size_t i = 0; i < x.dimension(); ++i)
        if (torus_antipodal(x[i], y[i])) ++k;
    return k;
}

std::vector<TorusGeodesic> torus_geodesics(const TorusPoint& x, const TorusPoint& y) {
    require_same_dimension(x, y);
    const std::size_t n = x.dimension();
    std::vector<std::vector<Rational>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (torus_antipodal(x[i], y[i])) options[i] = {-kHalf, kHalf};
        else options[i] = {centered(y[i] - x[i])};
    }

    std::vector<TorusGeodesic> out;
    Vec current(n);
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back({x, current, squared_norm(current)});
            return;
        }
        for (const auto& o : options[i]) {
            current[i] = o;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

CutLocusGraph torus_cut_locus(const TorusPoint& x) {
    const std::size_t n = x.dimension();
    CutLocusGraph g;
    g.space = "torus:" + std::to_string(n);
    g.basepoint = x.coords();

    Vec antipode(n);
    for (std::size_t i = 0; i < n; ++i) antipode[i] = frac(x[i] + kHalf);
    g.vertices.push_back({antipode, 1 << n});

    // The antipodal set in all coordinates but i is a circle through the antipode.
    if (n >= 2) {
        for (std::size_t i = n; i-- > 0;) {
            Vec end = antipode;
            end[i] += 1;
            g.edges.push_back({0, 0, {antipode, end}, 1 << (n - 1)});
        }
    }

    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned m : masks) {
        CutStratum s;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (1u << i)) s.antipodal.push_back(i);
        s.dimension = n - s.antipodal.size();
        s.multiplicity = 1 << s.antipodal.size();
        g.strata.push_back(std::move(s));
    }
    return g;
}

PlannerResult<TorusGeodesic> torus_plan(const TorusPoint& x, const TorusPoint& y) {
    require_same_dimension(x, y);
    const int k = torus_stratum(x, y);
    Vec d(x.dimension());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = torus_antipodal(x[i], y[i]) ? kHalf : centered(y[i] - x[i]);
    Rational sq = squared_norm(d);
    return {k - 1, TorusGeodesic{x, std::move(d), std::move(sq)}};
}

Rational torus_squared_distance(const TorusPoint& x, const TorusPoint& y) {
    require_same_dimension(x, y);
    Rational s = 0;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        Rational d = centered(y[i] - x[i]);
        s += d * d;
    }
    return s;
}

ExactLength torus_sup_distance(const TorusGeodesic& a, const TorusGeodesic& b) {
    require_same_dimension(a.start, b.start);
    Polyline pa = a.lift();
    Polyline pb = b.lift();
    Vec shift(a.start.dimension());
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] = Rational(floor(a.start[i] - b.start[i] + kHalf));
    for (auto& v : pb.vertices) v = v + shift;
    return sup_distance(pa, pb);
}

Permutation torus_monodromy(std::size_t n, std::size_t steps) {
    if (n == 0) throw ValidationError("torus dimension must be positive");
    if (steps < 8) throw ValidationError("monodromy needs at least 8 steps");
    const Rational c(1, 3);
    auto displacements_at = [&](std::size_t i) {
        Vec x(n, c), y(n);
        x[0] = Rational(static_cast<long>(i % steps), static_cast<long>(steps));
        x[0].canonicalize();
        for (std::size_t j = 0; j < n; ++j) y[j] = x[j] + kHalf;
        std::vector<Vec> d;
        for (const auto& g : torus_geodesics(TorusPoint(x), TorusPoint(y))) d.push_back(g.displacement);
        return d;
    };

    const auto initial = displacements_at(0);
    std::vector<std::size_t> sheet(initial.size());
    for (std::size_t j = 0; j < sheet.size(); ++j) sheet[j] = j;
    auto current = initial;
    for (std::size_t i = 1; i <= steps; ++i) {
        // Closing the loop is the deck translation by e_1, whose linear part is
        // the identity, so displacements carry over unchanged.
        auto next = displacements_at(i);
        auto match = nearest_matching(current, next);
        for (auto& s : sheet) s = match[s];
        current = std::move(next);
    }
    return Permutation(sheet);
}

StratPoset torus_local_poset(std::size_t n) {
    if (n == 0 || n > 8) throw ValidationError("torus_corner dimension must be in 1..8");
    StratPoset p;
    p.name = "torus_corner:" + std::to_string(n);

    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : {'+', '-', '*'}) next.push_back(w + c);
        words = std::move(next);
    }
    auto completions = [](const std::string& w) {
        std::vector<std::string> out{""};
        for (char c : w) {
            std::vector<std::string> next;
            for (const auto& o : out) {
                if (c == '*') {
                    next.push_back(o + '+');
                    next.push_back(o + '-');
                } else {
                    next.push_back(o + c);
                }
            }
            out = std::move(next);
        }
        return out;
    };
    auto stars = [](const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), '*')); };
    std::stable_sort(words.begin(), words.end(),
                     [&](const std::string& a, const std::string& b) { return stars(a) < stars(b); });

    for (const auto& w : words) p.elements.push_back({w, stars(w) + 1, completions(w)});
    for (const auto& w : words) {
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] != '*') continue;
            for (char s : {'+', '-'}) {
                std::string src = w;
                src[i] = s;
                PosetCover c{src, w, {}};
                for (const auto& sheet : completions(src)) c.map[sheet] = sheet;
                p.covers.push_back(std::move(c));
            }
        }
    }
    p.flags = {true, true, true};
    return p;
}

} // namespace geoplan
