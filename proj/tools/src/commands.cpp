#include "geoplan/cli/commands.hpp"
#include "geoplan/cli/svg.hpp"

#include "geoplan/errors.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace geoplan::cli {

namespace {

const Rational kHalf(1, 2);

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

Json cube_point_json(const CubePoint& p) {
    Json j;
    j["face"] = face_name(p.face());
    j["u"] = rational_json(p.u());
    j["v"] = rational_json(p.v());
    j["position"] = vec_json(p.position());
    return j;
}

Json length_json(const Rational& squared) {
    const ExactLength l = ExactLength::sqrt_of(squared);
    Json j;
    j["squared_length"] = rational_json(squared);
    j["length"] = l.str();
    j["length_decimal"] = l.decimal(12);
    return j;
}

std::string coords_field(const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

Point2 chart_point(const Vec& v) {
    if (v.size() == 1) return {to_double(v[0]), 0.5};
    return {to_double(v[0]), to_double(v[1])};
}

// Cabinet projection of the cube: depth Y recedes up and to the right.
Point2 cube_point(const Vec& p) {
    const double x = to_double(p[0]), y = to_double(p[1]), z = to_double(p[2]);
    return {x + 0.35 * y, z + 0.35 * y};
}

// Unit cells of the universal cover around the fundamental domain.
void draw_cover_grid(SvgCanvas& svg, bool one_dimensional) {
    for (int i = -1; i <= 2; ++i) {
        svg.line({i, -1}, {i, 2}, "#bbbbbb", 0.6, true);
        if (!one_dimensional) svg.line({-1, i}, {2, i}, "#bbbbbb", 0.6, true);
    }
    if (one_dimensional) {
        svg.line({-1, 0.5}, {2, 0.5}, "#bbbbbb", 0.6);
        svg.line({0, 0.5}, {1, 0.5}, "#000000", 2);
    } else {
        svg.polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "#000000", "none");
    }
}

void draw_cube_frame(SvgCanvas& svg) {
    const std::vector<Vec> corners = [] {
        std::vector<Vec> c;
        for (int i = 0; i < 8; ++i)
            c.push_back({i & 1 ? kHalf : -kHalf, i & 2 ? kHalf : -kHalf, i & 4 ? kHalf : -kHalf});
        return c;
    }();
    for (int a = 0; a < 8; ++a)
        for (int bit : {1, 2, 4})
            if (!(a & bit)) svg.line(cube_point(corners[a]), cube_point(corners[a | bit]), "#888888", 0.8);
}

std::vector<Vec> sampled(const Polyline& p, int resolution, std::vector<Rational>* params) {
    std::vector<Vec> out;
    for (std::size_t s = 0; s + 1 < p.vertices.size() || (p.vertices.size() == 1 && s == 0); ++s) {
        if (p.vertices.size() == 1) {
            out.push_back(p.vertices[0]);
            if (params) params->push_back(Rational(0));
            break;
        }
        for (int k = s == 0 ? 0 : 1; k < resolution; ++k) {
            Rational f(k, resolution - 1);
            f.canonicalize();
            const Rational t = p.params[s] + f * (p.params[s + 1] - p.params[s]);
            out.push_back(p.at(t));
            if (params) params->push_back(t);
        }
    }
    return out;
}

void require_2d(const Space& space, const char* what) {
    if (space.kind == Space::Kind::torus && space.dim > 2)
        throw DomainError(std::string(what) + " is drawn only for torus:1 and torus:2");
}

} // namespace

Json rational_json(const Rational& q) {
    return to_string(q);
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(rational_json(c));
    return a;
}

Json polyline_json(const Polyline& p) {
    Json j;
    j["chart"] = p.chart;
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(vec_json(v));
    j["vertices"] = verts;
    j["params"] = vec_json(p.params);
    return j;
}

Space parse_space(std::string_view text) {
    const std::string s = trim(text);
    if (s == "klein") return {Space::Kind::klein, 2, s};
    if (s == "cube") return {Space::Kind::cube, 2, s};
    for (std::string_view prefix : {"torus:", "torus"}) {
        if (s.rfind(prefix, 0) != 0) continue;
        const std::string digits = s.substr(prefix.size());
        if (digits.empty() && prefix == "torus") return {Space::Kind::torus, 2, "torus:2"};
        if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) break;
        const auto n = static_cast<std::size_t>(std::stoul(digits));
        if (n < 1 || n > 16) throw DomainError("torus dimension must be in 1..16");
        return {Space::Kind::torus, n, "torus:" + std::to_string(n)};
    }
    throw ParseError("unknown space '" + s + "' (expected torus:n, klein or cube)");
}

TorusPoint parse_torus_point(std::string_view text, std::size_t n) {
    Vec v = parse_rational_list(text);
    if (v.size() != n)
        throw DimensionMismatch("expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
    return TorusPoint(std::move(v));
}

KleinPoint parse_klein_point(std::string_view text) {
    Vec v = parse_rational_list(text);
    if (v.size() != 2) throw DimensionMismatch("klein points have 2 coordinates, got " + std::to_string(v.size()));
    return KleinPoint::project(v);
}

CubePoint parse_cube_point(std::string_view text) {
    const std::string s = trim(text);
    if (s == "corner:p" || s == "p") return cube_corner_p();
    if (s == "corner:q" || s == "q") return cube_corner_q();
    if (auto colon = s.find(':'); colon != std::string::npos) {
        Face f;
        try {
            f = parse_face(s.substr(0, colon));
        } catch (const Error&) {
            throw ParseError("unknown cube face '" + s.substr(0, colon) + "'");
        }
        Vec uv = parse_rational_list(s.substr(colon + 1));
        if (uv.size() != 2) throw DimensionMismatch("face coordinates need 2 values");
        if (abs(uv[0]) > kHalf || abs(uv[1]) > kHalf) throw DomainError("face coordinates must lie in [-1/2, 1/2]");
        return CubePoint(f, uv[0], uv[1]);
    }
    return CubePoint::from_position(parse_rational_list(s));
}

// ------------------------------------------------------------- geodesics

namespace {

GeodesicView torus_view(const TorusGeodesic& g) {
    GeodesicView v;
    v.data["displacement"] = vec_json(g.displacement);
    v.data.update(length_json(g.squared_length));
    v.path = g.lift();
    v.data["lift"] = polyline_json(v.path);
    return v;
}

GeodesicView klein_view(const KleinGeodesic& g) {
    GeodesicView v;
    v.data["end_lift"] = vec_json(g.end_lift);
    v.data["deck"] = Json{{"a", g.deck.a}, {"b", g.deck.b}};
    v.data["displacement"] = vec_json(g.displacement());
    v.data["sheet"] = klein_sheet_name(g.displacement());
    v.data.update(length_json(g.squared_length));
    v.path = g.lift();
    v.data["lift"] = polyline_json(v.path);
    return v;
}

GeodesicView cube_view(const UnfoldedPath& g) {
    GeodesicView v;
    v.data["label"] = g.label();
    Json faces = Json::array();
    for (Face f : g.face_sequence) faces.push_back(face_name(f));
    v.data["faces"] = faces;
    v.data.update(length_json(g.squared_length));
    v.data["planar_start"] = vec_json(g.planar_start);
    v.data["planar_end"] = vec_json(g.planar_end);
    v.path = g.surface_polyline();
    v.data["trace"] = polyline_json(v.path);
    return v;
}

} // namespace

GeodesicSet compute_geodesics(const Space& space, std::string_view xs, std::string_view ys) {
    GeodesicSet set;
    set.space = space;
    switch (space.kind) {
    case Space::Kind::torus: {
        const TorusPoint x = parse_torus_point(xs, space.dim), y = parse_torus_point(ys, space.dim);
        set.x = vec_json(x.coords());
        set.y = vec_json(y.coords());
        set.stratum = torus_stratum(x, y);
        for (const auto& g : torus_geodesics(x, y)) set.geodesics.push_back(torus_view(g));
        break;
    }
    case Space::Kind::klein: {
        const KleinPoint x = parse_klein_point(xs), y = parse_klein_point(ys);
        set.x = vec_json(x.coords());
        set.y = vec_json(y.coords());
        const auto gs = klein_geodesics(x, y);
        set.stratum = static_cast<int>(gs.size());
        for (const auto& g : gs) set.geodesics.push_back(klein_view(g));
        break;
    }
    case Space::Kind::cube: {
        const CubePoint x = parse_cube_point(xs), y = parse_cube_point(ys);
        set.x = cube_point_json(x);
        set.y = cube_point_json(y);
        const auto gs = cube_geodesics(x, y);
        set.stratum = static_cast<int>(gs.size());
        for (const auto& g : gs) set.geodesics.push_back(cube_view(g));
        break;
    }
    }
    return set;
}

Json geodesics_json(const GeodesicSet& set) {
    Json j;
    j["space"] = set.space.name;
    j["x"] = set.x;
    j["y"] = set.y;
    j["stratum"] = set.stratum;
    j["count"] = set.geodesics.size();
    if (!set.geodesics.empty()) j["squared_length"] = set.geodesics.front().data["squared_length"];
    Json gs = Json::array();
    for (const auto& g : set.geodesics) gs.push_back(g.data);
    j["geodesics"] = gs;
    return j;
}

std::string geodesics_svg(const GeodesicSet& set, int resolution) {
    require_2d(set.space, "geodesics");
    const bool cube = set.space.kind == Space::Kind::cube;
    SvgCanvas svg(cube ? -1.0 : -1.0, cube ? 1.0 : 2.0);
    svg.title(set.space.name + " geodesics: " + std::to_string(set.geodesics.size()));
    if (cube) draw_cube_frame(svg);
    else draw_cover_grid(svg, set.space.dim == 1 && set.space.kind == Space::Kind::torus);
    for (std::size_t i = 0; i < set.geodesics.size(); ++i) {
        std::vector<Point2> pts;
        for (const auto& v : sampled(set.geodesics[i].path, resolution, nullptr))
            pts.push_back(cube ? cube_point(v) : chart_point(v));
        svg.polyline(pts, palette(i), 2);
        svg.dot(pts.back(), palette(i), 3.5);
        if (set.geodesics[i].data.contains("label")) svg.text(pts[pts.size() / 2], set.geodesics[i].data["label"].get<std::string>());
    }
    if (!set.geodesics.empty()) {
        const auto& p = set.geodesics.front().path;
        svg.dot(cube ? cube_point(p.vertices.front()) : chart_point(p.vertices.front()), "#000000", 4.5);
    }
    return svg.str();
}

std::string geodesics_csv(const GeodesicSet& set, int resolution) {
    std::ostringstream os;
    os << "geodesic,t,point\n";
    for (std::size_t i = 0; i < set.geodesics.size(); ++i) {
        std::vector<Rational> params;
        const auto pts = sampled(set.geodesics[i].path, resolution, &params);
        for (std::size_t k = 0; k < pts.size(); ++k) os << i << "," << to_string(params[k]) << "," << coords_field(pts[k]) << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------- cut locus

namespace {

Json graph_json(const CutLocusGraph& g) {
    Json j;
    j["space"] = g.space;
    j["basepoint"] = vec_json(g.basepoint);
    j["shape"] = g.shape();
    Json vs = Json::array();
    for (const auto& v : g.vertices) vs.push_back(Json{{"point", vec_json(v.point)}, {"multiplicity", v.multiplicity}});
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : g.edges) {
        Json arc = Json::array();
        for (const auto& p : e.arc) arc.push_back(vec_json(p));
        es.push_back(Json{{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}, {"arc", arc}});
    }
    j["edges"] = es;
    Json ss = Json::array();
    for (const auto& s : g.strata)
        ss.push_back(Json{{"antipodal", s.antipodal}, {"dimension", s.dimension}, {"multiplicity", s.multiplicity}});
    j["strata"] = ss;
    Json degrees = Json::array();
    for (auto d : g.degrees()) degrees.push_back(d);
    j["degrees"] = degrees;
    return j;
}

CutLocusGraph cut_locus_of(const Space& space, std::string_view x) {
    switch (space.kind) {
    case Space::Kind::torus:
        return torus_cut_locus(parse_torus_point(x, space.dim));
    case Space::Kind::klein:
        return klein_cut_locus(parse_klein_point(x));
    case Space::Kind::cube:
        break;
    }
    throw DomainError("cut loci are available for torus:n and klein");
}

} // namespace

Json cutlocus_json(const Space& space, std::string_view x) {
    Json j = graph_json(cut_locus_of(space, x));
    if (space.kind == Space::Kind::klein) j["dirichlet_cell"] = [&] {
        Json a = Json::array();
        for (const auto& v : klein_dirichlet_cell(parse_klein_point(x))) a.push_back(vec_json(v));
        return a;
    }();
    return j;
}

std::string cutlocus_svg(const Space& space, std::string_view x) {
    require_2d(space, "cut locus");
    const CutLocusGraph g = cut_locus_of(space, x);
    SvgCanvas svg(-1.0, 2.0);
    svg.title(space.name + " cut locus: " + g.shape());
    const bool one = space.kind == Space::Kind::torus && space.dim == 1;
    draw_cover_grid(svg, one);
    if (space.kind == Space::Kind::klein) {
        std::vector<Point2> cell;
        for (const auto& v : klein_dirichlet_cell(parse_klein_point(x))) cell.push_back(chart_point(v));
        svg.polygon(cell, "#d62728", "#fde0dd");
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        std::vector<Point2> pts;
        for (const auto& p : g.edges[i].arc) pts.push_back(chart_point(p));
        svg.polyline(pts, "#d62728", 2.5);
    }
    svg.dot(chart_point(g.basepoint), "#000000", 4.5);
    for (const auto& v : g.vertices) {
        const Point2 p = chart_point(v.point);
        svg.dot(p, "#1f77b4", 5);
        svg.text({p.first + 0.04, p.second + 0.04}, std::to_string(v.multiplicity));
    }
    return svg.str();
}

// ------------------------------------------------------------------ plan

Json plan_json(const Space& space, std::string_view xs, std::string_view ys) {
    Json j;
    j["space"] = space.name;
    switch (space.kind) {
    case Space::Kind::torus: {
        const TorusPoint x = parse_torus_point(xs, space.dim), y = parse_torus_point(ys, space.dim);
        const auto r = torus_plan(x, y);
        j["x"] = vec_json(x.coords());
        j["y"] = vec_json(y.coords());
        j["domain"] = r.domain;
        j["domains"] = space.dim + 1;
        j["geodesic"] = torus_view(r.geodesic).data;
        return j;
    }
    case Space::Kind::klein: {
        const KleinPoint x = parse_klein_point(xs), y = parse_klein_point(ys);
        const auto r = klein_plan(x, y);
        j["x"] = vec_json(x.coords());
        j["y"] = vec_json(y.coords());
        j["domain"] = r.domain;
        j["domains"] = 5;
        j["geodesic"] = klein_view(r.geodesic).data;
        return j;
    }
    case Space::Kind::cube:
        break;
    }
    throw DomainError("motion planners are available for torus:n and klein");
}

// ---------------------------------------------------------------- sample

std::string sample_csv(const Space& space, std::string_view xs, long grid) {
    if (grid < 1) throw DomainError("grid must be at least 1");
    std::ostringstream os;
    os << "x,y,stratum,count,min_sq_length\n";
    auto frac_of = [&](long i) {
        Rational q(i, grid);
        q.canonicalize();
        return q;
    };
    switch (space.kind) {
    case Space::Kind::torus: {
        const TorusPoint x = parse_torus_point(xs, space.dim);
        double total = std::pow(static_cast<double>(grid), static_cast<double>(space.dim));
        if (total > 1e6) throw DomainError("grid too large for this dimension");
        std::vector<long> idx(space.dim, 0);
        while (true) {
            Vec c(space.dim);
            for (std::size_t i = 0; i < space.dim; ++i) c[i] = frac_of(idx[i]);
            const TorusPoint y(c);
            const int k = torus_stratum(x, y);
            os << coords_field(x.coords()) << "," << coords_field(y.coords()) << "," << k << "," << (1L << (k - 1)) << ","
               << to_string(torus_squared_distance(x, y)) << "\n";
            std::size_t i = 0;
            while (i < space.dim && ++idx[i] == grid) idx[i++] = 0;
            if (i == space.dim) break;
        }
        break;
    }
    case Space::Kind::klein: {
        const KleinPoint x = parse_klein_point(xs);
        if (grid > 1000) throw DomainError("grid too large");
        for (long a = 0; a < grid; ++a)
            for (long b = 0; b < grid; ++b) {
                const KleinPoint y(frac_of(a), frac_of(b));
                const auto gs = klein_geodesics(x, y);
                os << coords_field(x.coords()) << "," << coords_field(y.coords()) << "," << gs.size() << "," << gs.size() << ","
                   << to_string(gs.front().squared_length) << "\n";
            }
        break;
    }
    case Space::Kind::cube: {
        const CubePoint x = parse_cube_point(xs);
        if (grid > 40) throw DomainError("grid too large for the cube search");
        std::set<Vec> seen;
        for (Face f : kAllFaces)
            for (long a = 0; a < grid; ++a)
                for (long b = 0; b < grid; ++b) {
                    Rational u(2 * a + 1, 2 * grid), v(2 * b + 1, 2 * grid);
                    u.canonicalize();
                    v.canonicalize();
                    const CubePoint y(f, u - kHalf, v - kHalf);
                    if (!seen.insert(y.position()).second) continue;
                    const auto gs = cube_geodesics(x, y);
                    os << coords_field(x.position()) << "," << coords_field(y.position()) << "," << gs.size() << ","
                       << gs.size() << "," << to_string(gs.front().squared_length) << "\n";
                }
        break;
    }
    }
    return os.str();
}

// ---------------------------------------------------------------- posets

StratPoset poset_from_json(const Json& doc) {
    auto need = [](const Json& j, const char* key, const char* where) -> const Json& {
        if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(where) + " is missing \"" + key + "\"");
        return j.at(key);
    };
    try {
        StratPoset p;
        if (!doc.is_object()) throw ParseError("poset document must be a JSON object");
        p.name = doc.value("name", std::string("document"));
        const Json& elements = need(doc, "elements", "document");
        if (!elements.is_array()) throw ParseError("\"elements\" must be an array");
        for (const auto& e : elements) {
            PosetElement el;
            el.id = need(e, "id", "element").get<std::string>();
            el.level = need(e, "level", "element").get<int>();
            el.sheets = need(e, "sheets", "element").get<std::vector<std::string>>();
            p.elements.push_back(std::move(el));
        }
        if (doc.contains("covers")) {
            for (const auto& c : doc.at("covers")) {
                PosetCover cov;
                cov.src = need(c, "src", "cover").get<std::string>();
                cov.dst = need(c, "dst", "cover").get<std::string>();
                cov.map = need(c, "map", "cover").get<std::map<std::string, std::string>>();
                p.covers.push_back(std::move(cov));
            }
        }
        if (doc.contains("flags")) {
            const Json& f = doc.at("flags");
            p.flags.trivial_coverings = f.value("trivial_coverings", false);
            p.flags.locally_compact = f.value("locally_compact", false);
            p.flags.nonempty_intersections = f.value("nonempty_intersections", false);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("poset document: ") + e.what());
    }
}

Json poset_to_json(const StratPoset& p) {
    Json j;
    j["name"] = p.name;
    Json es = Json::array();
    for (const auto& e : p.elements) es.push_back(Json{{"id", e.id}, {"level", e.level}, {"sheets", e.sheets}});
    j["elements"] = es;
    Json cs = Json::array();
    for (const auto& c : p.covers) {
        Json m = Json::object();
        for (const auto& [k, v] : c.map) m[k] = v;
        cs.push_back(Json{{"src", c.src}, {"dst", c.dst}, {"map", m}});
    }
    j["covers"] = cs;
    j["flags"] = Json{{"trivial_coverings", p.flags.trivial_coverings},
                      {"locally_compact", p.flags.locally_compact},
                      {"nonempty_intersections", p.flags.nonempty_intersections}};
    return j;
}

Json bound_json(const StratPoset& p) {
    Json j;
    j["name"] = p.name;
    const ValidationReport v = validate_poset(p);
    j["valid"] = v.ok;
    j["problems"] = v.problems;
    if (!v.ok) return j;
    const BoundReport b = lower_bound(p);
    j["levels"] = b.levels;
    j["lower_bound"] = b.lower_bound ? Json(*b.lower_bound) : Json(nullptr);
    j["inconsistent_elements"] = b.inconsistent_elements;
    j["consistent_elements"] = b.consistent_elements;
    const auto eq = upper_bound_if_trivial(p, p.flags);
    j["equality"] = eq ? Json(*eq) : Json(nullptr);
    j["flags"] = poset_to_json(p)["flags"];
    return j;
}

} // namespace geoplan::cli
