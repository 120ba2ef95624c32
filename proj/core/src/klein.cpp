#include "geoplan/klein.hpp"

#include "geoplan/convex_polygon.hpp"
#include "geoplan/errors.hpp"

#include <algorithm>
#include <map>

namespace geoplan {
namespace {

const Rational kHalf(1, 2);

bool is_even(long a) { return a % 2 == 0; }

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

// ----------------------------------------------------------------- points

KleinPoint::KleinPoint(const Rational& x1, const Rational& x2) { coords_ = project({x1, x2}).coords_; }

KleinPoint KleinPoint::project(const Vec& p) {
    if (p.size() != 2) throw DimensionMismatch("Klein bottle points have 2 coordinates");
    const long a = floor(p[0]).get_si();
    Vec q = DeckElement{-a, 0}.apply(p);
    KleinPoint out;
    out.coords_ = {q[0], frac(q[1])};
    return out;
}

Vec DeckElement::apply(const Vec& p) const {
    if (is_even(a)) return {p[0] + a, p[1] + b};
    return {p[0] + a, 1 - p[1] - b};
}

DeckElement DeckElement::inverse() const { return is_even(a) ? DeckElement{-a, -b} : DeckElement{-a, b}; }

DeckElement DeckElement::compose(const DeckElement& other) const {
    return {a + other.a, is_even(other.a) ? b + other.b : other.b - b};
}

Vec DeckElement::apply_linear(const Vec& d) const {
    if (is_even(a)) return d;
    return {d[0], -d[1]};
}

Polyline KleinGeodesic::lift() const { return Polyline::uniform({start_lift, end_lift}, "klein-cover"); }

// ------------------------------------------------------------- geodesics

std::vector<OrbitPoint> klein_lift_orbit(const KleinPoint& y, int window) {
    if (window < 1) throw ValidationError("orbit window must be at least 1");
    std::vector<OrbitPoint> out;
    for (long a = -window; a <= window; ++a)
        for (long b = -window; b <= window; ++b) {
            DeckElement g{a, b};
            Vec p = g.apply(y.coords());
            bool seen = std::any_of(out.begin(), out.end(), [&](const OrbitPoint& o) { return o.point == p; });
            if (!seen) out.push_back({g, std::move(p)});
        }
    return out;
}

std::vector<KleinGeodesic> klein_geodesics(const KleinPoint& x, const KleinPoint& y, int window) {
    const Vec& start = x.coords();
    std::vector<KleinGeodesic> out;
    Rational best;
    for (auto& o : klein_lift_orbit(y, window)) {
        Rational d = squared_distance(start, o.point);
        if (out.empty() || d < best) {
            out.clear();
            best = d;
        }
        if (d == best) out.push_back({start, o.point, o.deck, d});
    }
    std::sort(out.begin(), out.end(),
              [](const KleinGeodesic& l, const KleinGeodesic& r) { return lex_less(l.end_lift, r.end_lift); });
    return out;
}

int klein_stratum(const KleinPoint& x, const KleinPoint& y) {
    return static_cast<int>(klein_geodesics(x, y).size());
}

Rational klein_squared_distance(const KleinPoint& x, const KleinPoint& y) {
    return klein_geodesics(x, y).front().squared_length;
}

// -------------------------------------------------------------- cut locus

std::vector<Vec> klein_dirichlet_cell(const KleinPoint& x) {
    const Vec& c = x.coords();
    auto cell = box_polygon(c[0] - 2, c[1] - 2, c[0] + 2, c[1] + 2);
    for (const auto& o : klein_lift_orbit(x, 2)) {
        if (o.point == c) continue;
        cell = clip(cell, bisector_half_plane(c, o.point));
    }
    return simplify_polygon(cell);
}

CutLocusGraph klein_cut_locus(const KleinPoint& x) {
    const auto cell = klein_dirichlet_cell(x);
    CutLocusGraph g;
    g.space = "klein";
    g.basepoint = x.coords();

    // Cell vertices that project to the same point of K are one vertex of C_x;
    // each of them is the end of a distinct geodesic.
    std::map<std::pair<Rational, Rational>, int> vertex_count;
    for (const auto& v : cell) {
        auto p = KleinPoint::project(v);
        ++vertex_count[{p[0], p[1]}];
    }
    std::map<std::pair<Rational, Rational>, std::size_t> vertex_index;
    for (const auto& [key, count] : vertex_count) {
        vertex_index[key] = g.vertices.size();
        g.vertices.push_back({{key.first, key.second}, count});
    }
    auto index_of = [&](const Vec& v) {
        auto p = KleinPoint::project(v);
        return vertex_index.at({p[0], p[1]});
    };

    // Cell edges are identified in pairs by the deck group.
    std::map<std::pair<Rational, Rational>, std::size_t> edge_index;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const Vec& a = cell[i];
        const Vec& b = cell[(i + 1) % cell.size()];
        auto mid = KleinPoint::project(lerp(a, b, kHalf));
        auto key = std::make_pair(mid[0], mid[1]);
        if (auto it = edge_index.find(key); it != edge_index.end()) {
            ++g.edges[it->second].multiplicity;
            continue;
        }
        edge_index[key] = g.edges.size();
        std::size_t from = index_of(a), to = index_of(b);
        g.edges.push_back({from, to, {a, b}, 1});
    }
    return g;
}

// ---------------------------------------------------------------- planner

int klein_domain(const KleinPoint& x, const KleinPoint& y) {
    const int k = klein_stratum(x, y);
    if (k == 1) return 0;
    const bool in_a = x[0] != 0;
    return in_a ? k - 1 : k;
}

PlannerResult<KleinGeodesic> klein_plan(const KleinPoint& x, const KleinPoint& y) {
    const auto gs = klein_geodesics(x, y);
    const int k = static_cast<int>(gs.size());
    const int domain = k == 1 ? 0 : (x[0] != 0 ? k - 1 : k);

    auto by_key = [&](auto key) {
        return *std::max_element(gs.begin(), gs.end(),
                                 [&](const KleinGeodesic& l, const KleinGeodesic& r) { return key(l) < key(r); });
    };
    auto up_right = [](const KleinGeodesic& g) {
        Vec d = g.displacement();
        return std::make_pair(d[1], d[0]);
    };
    auto right_up = [](const KleinGeodesic& g) {
        Vec d = g.displacement();
        return std::make_pair(d[0], d[1]);
    };

    switch (k) {
    case 1:
        return {domain, gs.front()};
    case 2:
        // Lifts sharing the first coordinate differ by a power of beta: the
        // target sits on a horizontal edge and we go up. Otherwise go right.
        if (gs[0].end_lift[0] == gs[1].end_lift[0]) return {domain, by_key(up_right)};
        return {domain, by_key(right_up)};
    case 3: {
        std::vector<const KleinGeodesic*> right, left;
        for (const auto& g : gs) (g.displacement()[0] >= 0 ? right : left).push_back(&g);
        if (right.size() == 1) return {domain, *right.front()};
        if (left.size() == 1) return {domain, *left.front()};
        return {domain, by_key(right_up)};
    }
    default:
        return {domain, by_key(up_right)};
    }
}

ExactLength klein_sup_distance(const KleinGeodesic& a, const KleinGeodesic& b) {
    DeckElement best_g;
    Rational best;
    bool first = true;
    for (long s = -2; s <= 2; ++s)
        for (long t = -2; t <= 2; ++t) {
            DeckElement g{s, t};
            Rational d = squared_distance(a.start_lift, g.apply(b.start_lift));
            if (first || d < best) {
                best = d;
                best_g = g;
                first = false;
            }
        }
    Polyline pb = Polyline::uniform({best_g.apply(b.start_lift), best_g.apply(b.end_lift)}, "klein-cover");
    return sup_distance(a.lift(), pb);
}

// -------------------------------------------------------------- monodromy

std::string klein_sheet_name(const Vec& d) {
    std::string s;
    s += d[1] > 0 ? 'U' : 'D';
    s += d[0] > 0 ? 'R' : 'L';
    return s;
}

Permutation klein_monodromy(const Rational& x2, std::size_t steps) {
    if (x2 != 0 && x2 != kHalf) throw DomainError("S4 loops exist only for x2 in {0, 1/2}");
    if (steps < 8) throw ValidationError("monodromy needs at least 8 steps");

    auto displacements_at = [&](std::size_t i) {
        Rational t(static_cast<long>(i), static_cast<long>(steps));
        t.canonicalize();
        KleinPoint x(t, x2);
        const auto locus = klein_cut_locus(x);
        const CutVertex* vertex = nullptr;
        for (const auto& v : locus.vertices)
            if (v.multiplicity == 4) vertex = &v;
        if (vertex == nullptr) throw Error("no multiplicity-4 vertex on the S4 loop");
        std::vector<Vec> d;
        for (const auto& g : klein_geodesics(x, KleinPoint::project(vertex->point))) d.push_back(g.displacement());
        if (d.size() != 4) throw Error("expected four geodesics on the S4 loop");
        return d;
    };

    // Deck element carrying the start of the loop to its end (1, x2).
    const Vec start{Rational(0), x2}, end{Rational(1), x2};
    DeckElement closing;
    bool found = false;
    for (long b = -2; b <= 2 && !found; ++b) {
        DeckElement g{1, b};
        if (g.apply(start) == end) {
            closing = g;
            found = true;
        }
    }
    if (!found) throw Error("loop closing deck element not found");

    const auto initial = displacements_at(0);
    std::vector<std::size_t> sheet(initial.size());
    for (std::size_t j = 0; j < sheet.size(); ++j) sheet[j] = j;
    auto current = initial;
    for (std::size_t i = 1; i <= steps; ++i) {
        std::vector<Vec> next;
        if (i < steps) {
            next = displacements_at(i);
        } else {
            for (const auto& d : initial) next.push_back(closing.apply_linear(d));
        }
        auto match = nearest_matching(current, next);
        for (auto& s : sheet) s = match[s];
        current = std::move(next);
    }
    return Permutation(sheet);
}

// ------------------------------------------------------------------ poset

StratPoset klein_local_poset(const std::string& kind) {
    if (kind != "S4_point") throw DomainError("unknown Klein local poset kind '" + kind + "'");
    const std::vector<std::string> chambers{"UR", "UL", "DR", "DL"};
    const std::vector<std::vector<std::string>> triples{
        {"UR", "UL", "DR"}, {"UR", "DL", "UL"}, {"DR", "DL", "UL"}, {"DR", "UR", "DL"}};

    StratPoset p;
    p.name = "klein_S4";
    auto id_of = [](const std::vector<std::string>& labels) {
        std::string id = "S" + std::to_string(labels.size()) + ":";
        for (std::size_t i = 0; i < labels.size(); ++i) id += (i ? "," : "") + labels[i];
        return id;
    };
    auto inclusion = [](const std::vector<std::string>& labels) {
        std::map<std::string, std::string> m;
        for (const auto& l : labels) m[l] = l;
        return m;
    };
    auto contains_all = [](const std::vector<std::string>& big, const std::vector<std::string>& small) {
        return std::all_of(small.begin(), small.end(),
                           [&](const std::string& s) { return std::find(big.begin(), big.end(), s) != big.end(); });
    };

    std::vector<std::vector<std::string>> pairs;
    for (std::size_t i = 0; i < chambers.size(); ++i)
        for (std::size_t j = i + 1; j < chambers.size(); ++j) pairs.push_back({chambers[i], chambers[j]});

    for (const auto& c : chambers) p.elements.push_back({id_of({c}), 1, {c}});
    for (const auto& e : pairs) p.elements.push_back({id_of(e), 2, e});
    for (const auto& t : triples) p.elements.push_back({id_of(t), 3, t});
    p.elements.push_back({"S4", 4, chambers});

    for (const auto& e : pairs)
        for (const auto& c : e) p.covers.push_back({id_of({c}), id_of(e), inclusion({c})});
    for (const auto& t : triples)
        for (const auto& e : pairs)
            if (contains_all(t, e)) p.covers.push_back({id_of(e), id_of(t), inclusion(e)});
    for (const auto& t : triples) p.covers.push_back({id_of(t), "S4", inclusion(t)});
    return p;
}

} // namespace geoplan
