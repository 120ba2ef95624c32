#include "geoplan/cube.hpp"

#include "geoplan/errors.hpp"

#include <algorithm>

namespace geoplan {
namespace {

const Rational kHalf(1, 2);

struct FaceChart {
    int axis;
    int sign;
    std::array<int, 3> center2; // twice the center
    std::array<int, 3> eu;
    std::array<int, 3> ev;
};

// Indexed by Face.
const std::array<FaceChart, 6> kCharts{{
    {2, -1, {0, 0, -1}, {1, 0, 0}, {0, 1, 0}},  // zm
    {2, +1, {0, 0, 1}, {1, 0, 0}, {0, -1, 0}},  // zp
    {0, +1, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},   // xp
    {0, -1, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  // xm
    {1, +1, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}},   // yp
    {1, -1, {0, -1, 0}, {1, 0, 0}, {0, 0, 1}},  // ym
}};

const FaceChart& chart(Face f) { return kCharts[static_cast<std::size_t>(f)]; }

Vec center(Face f) {
    const auto& c = chart(f).center2;
    return {Rational(c[0], 2), Rational(c[1], 2), Rational(c[2], 2)};
}

Rational dot(const Vec& a, const std::array<int, 3>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec to_local(Face f, const Vec& p) {
    Vec d = p - center(f);
    return {dot(d, chart(f).eu), dot(d, chart(f).ev)};
}

Vec to_position(Face f, const Rational& u, const Rational& v) {
    Vec p = center(f);
    const auto& c = chart(f);
    for (int i = 0; i < 3; ++i) p[i] += u * c.eu[i] + v * c.ev[i];
    return p;
}

bool on_face(Face f, const Vec& p) {
    const auto& c = chart(f);
    return p[c.axis] == Rational(c.sign, 2);
}

Rational cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Signed permutation matrix acting on chart coordinates.
struct Placement {
    Vec offset{Rational(0), Rational(0)};
    std::array<int, 4> m{1, 0, 0, 1};

    Vec map(const Vec& local) const {
        return {offset[0] + m[0] * local[0] + m[1] * local[1], offset[1] + m[2] * local[0] + m[3] * local[1]};
    }
};

const std::array<std::array<int, 4>, 8> kSignedPermutations{{
    {1, 0, 0, 1}, {-1, 0, 0, 1}, {1, 0, 0, -1}, {-1, 0, 0, -1},
    {0, 1, 1, 0}, {0, -1, 1, 0}, {0, 1, -1, 0}, {0, -1, -1, 0},
}};

struct SharedEdge {
    Vec a3, b3;   // endpoints on the cube
    Vec a2, b2;   // endpoints in the unfolding
};

struct Sequence {
    std::vector<Face> faces;
    std::vector<Placement> placements;
    std::vector<SharedEdge> edges;
};

std::pair<Vec, Vec> shared_edge(Face f, Face g) {
    const auto& cf = chart(f);
    const auto& cg = chart(g);
    const int k = 3 - cf.axis - cg.axis;
    Vec a(3), b(3);
    a[cf.axis] = b[cf.axis] = Rational(cf.sign, 2);
    a[cg.axis] = b[cg.axis] = Rational(cg.sign, 2);
    a[k] = -kHalf;
    b[k] = kHalf;
    return {a, b};
}

// Appends g to the unfolding, rotating it across the shared edge.
void extend(Sequence& s, Face g) {
    const Face f = s.faces.back();
    if (!faces_adjacent(f, g)) throw DomainError("faces " + face_name(f) + " and " + face_name(g) + " are not adjacent");
    const Placement& pf = s.placements.back();
    auto [a3, b3] = shared_edge(f, g);
    const Vec a2 = pf.map(to_local(f, a3));
    const Vec b2 = pf.map(to_local(f, b3));
    const Vec ga = to_local(g, a3), gb = to_local(g, b3);
    const Vec edge = b2 - a2;
    const Rational side_f = cross2(edge, pf.offset - a2);

    for (const auto& m : kSignedPermutations) {
        Placement p;
        p.m = m;
        p.offset = {Rational(0), Rational(0)};
        Vec image_a = p.map(ga);
        p.offset = a2 - image_a;
        if (p.map(gb) != b2) continue;
        const Rational side_g = cross2(edge, p.offset - a2);
        if (side_g * side_f >= 0) continue;
        s.faces.push_back(g);
        s.placements.push_back(p);
        s.edges.push_back({a3, b3, a2, b2});
        return;
    }
    throw Error("no unfolding placement for " + face_name(g));
}

Sequence build_sequence(const std::vector<Face>& faces) {
    if (faces.empty()) throw DomainError("empty face sequence");
    Sequence s;
    s.faces.push_back(faces.front());
    s.placements.emplace_back();
    for (std::size_t i = 1; i < faces.size(); ++i) extend(s, faces[i]);
    return s;
}

constexpr std::size_t kCachedFaces = 6;

// Every simple face sequence of at most kCachedFaces faces, grouped by first face.
const std::array<std::vector<Sequence>, 6>& sequence_cache() {
    static const std::array<std::vector<Sequence>, 6> cache = [] {
        std::array<std::vector<Sequence>, 6> out;
        for (Face start : kAllFaces) {
            auto& list = out[static_cast<std::size_t>(start)];
            Sequence root;
            root.faces = {start};
            root.placements.emplace_back();
            std::vector<Sequence> frontier{root};
            list.push_back(root);
            for (std::size_t len = 2; len <= kCachedFaces; ++len) {
                std::vector<Sequence> next;
                for (const auto& s : frontier)
                    for (Face g : kAllFaces) {
                        if (!faces_adjacent(s.faces.back(), g)) continue;
                        if (std::find(s.faces.begin(), s.faces.end(), g) != s.faces.end()) continue;
                        Sequence t = s;
                        extend(t, g);
                        next.push_back(std::move(t));
                    }
                list.insert(list.end(), next.begin(), next.end());
                frontier = std::move(next);
            }
        }
        return out;
    }();
    return cache;
}

std::optional<UnfoldedPath> unfold_sequence(const Sequence& s, const CubePoint& x, const CubePoint& y) {
    const Vec x3 = x.position(), y3 = y.position();
    if (!on_face(s.faces.front(), x3) || !on_face(s.faces.back(), y3)) return std::nullopt;

    const Vec A = to_local(s.faces.front(), x3);
    const Vec B = s.placements.back().map(to_local(s.faces.back(), y3));
    const Vec dir = B - A;

    UnfoldedPath path;
    path.face_sequence = s.faces;
    path.planar_start = A;
    path.planar_end = B;
    path.squared_length = squared_norm(dir);
    path.trace.push_back(x3);
    path.params.emplace_back(0);

    Rational last_t = 0;
    for (const auto& e : s.edges) {
        const Vec ev = e.b2 - e.a2;
        const Rational denom = cross2(dir, ev);
        if (denom == 0) return std::nullopt;
        const Vec w = e.a2 - A;
        const Rational t = cross2(w, ev) / denom;
        const Rational u = cross2(w, dir) / denom;
        if (u <= 0 || u >= 1) return std::nullopt; // misses the edge or hits a corner
        if (t < last_t || t > 1) return std::nullopt;
        last_t = t;
        Vec p = lerp(e.a3, e.b3, u);
        if (p != path.trace.back()) {
            path.trace.push_back(std::move(p));
            path.params.push_back(t);
        }
    }
    if (y3 != path.trace.back()) {
        path.trace.push_back(y3);
        path.params.emplace_back(1);
    }
    return path;
}

bool sequence_less(const UnfoldedPath& a, const UnfoldedPath& b) {
    if (a.squared_length != b.squared_length) return a.squared_length < b.squared_length;
    if (a.face_sequence.size() != b.face_sequence.size()) return a.face_sequence.size() < b.face_sequence.size();
    return a.face_sequence < b.face_sequence;
}

const std::array<std::vector<Face>, 12> kFamilyA{{
    {Face::zm, Face::yp, Face::zp},
    {Face::zm, Face::yp, Face::xp, Face::zp},
    {Face::zm, Face::xp, Face::yp, Face::zp},
    {Face::zm, Face::xp, Face::zp},
    {Face::zm, Face::xp, Face::ym, Face::zp},
    {Face::zm, Face::ym, Face::xp, Face::zp},
    {Face::zm, Face::ym, Face::zp},
    {Face::zm, Face::ym, Face::xm, Face::zp},
    {Face::zm, Face::xm, Face::ym, Face::zp},
    {Face::zm, Face::xm, Face::zp},
    {Face::zm, Face::xm, Face::yp, Face::zp},
    {Face::zm, Face::yp, Face::xm, Face::zp},
}};

// D_i as (face at p, face at q).
const std::array<std::pair<Face, Face>, 6> kCornerPaths{{
    {Face::xm, Face::zp},
    {Face::xm, Face::yp},
    {Face::zm, Face::yp},
    {Face::zm, Face::xp},
    {Face::ym, Face::xp},
    {Face::ym, Face::zp},
}};

std::vector<Face> rotated(const std::vector<Face>& faces, int times) {
    std::vector<Face> out;
    for (Face f : faces) out.push_back(rotate_about_corners(f, times));
    return out;
}

const std::map<std::vector<Face>, std::string>& label_table() {
    static const std::map<std::vector<Face>, std::string> table = [] {
        std::map<std::vector<Face>, std::string> t;
        for (int i = 0; i < 12; ++i) {
            const auto& a = kFamilyA[static_cast<std::size_t>(i)];
            t[a] = "A" + std::to_string(i + 1);
            t[rotated(a, 2)] = "B" + std::to_string(i + 1);
            t[rotated(a, 1)] = "C" + std::to_string(i + 1);
        }
        return t;
    }();
    return table;
}

// Sort key for labels: family letter, then numeric index.
bool label_less(const std::string& a, const std::string& b) {
    if (a.empty() || b.empty() || a[0] != b[0]) return a < b;
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
}

std::array<Rational, 12> n_values(const Rational& x1, const Rational& x2, const Rational& y1, const Rational& y2) {
    const Rational h = kHalf;
    return {
        -x1 * y1 - 2 * x2 + 2 * y2 - x2 * y2,
        h - x1 + y2 - x1 * y2 - 2 * x2 - 2 * y1 + x2 * y1,
        h - x2 - y1 + x2 * y1 - 2 * x1 + 2 * y2 - x1 * y2,
        x2 * y2 - 2 * x1 - 2 * y1 + x1 * y1,
        h + x2 - y1 - x2 * y1 - 2 * x1 - 2 * y2 + x1 * y2,
        h - x1 - y2 + x1 * y2 + 2 * x2 - 2 * y1 - x2 * y1,
        -x1 * y1 + 2 * x2 - 2 * y2 - x2 * y2,
        h + x1 - y2 - x1 * y2 + 2 * x2 + 2 * y1 + x2 * y1,
        h + x2 + y1 + x2 * y1 + 2 * x1 - 2 * y2 - x1 * y2,
        x2 * y2 + 2 * x1 + 2 * y1 + x1 * y1,
        h - x2 + y1 - x2 * y1 + 2 * x1 + 2 * y2 + x1 * y2,
        h + x1 + y2 + x1 * y2 - 2 * x2 + 2 * y1 - x2 * y1,
    };
}

Rational sq(const Rational& a) { return a * a; }

void require_open(const Rational& c, const char* what) {
    if (c <= -kHalf || c >= kHalf) throw DomainError(std::string(what) + " must lie strictly inside the face");
}

} // namespace

// ------------------------------------------------------------------ faces

std::string face_name(Face f) {
    static const std::array<const char*, 6> names{"zm", "zp", "xp", "xm", "yp", "ym"};
    return names[static_cast<std::size_t>(f)];
}

Face parse_face(std::string_view name) {
    for (Face f : kAllFaces)
        if (face_name(f) == name) return f;
    throw ParseError("unknown cube face '" + std::string(name) + "'");
}

bool faces_adjacent(Face a, Face b) { return chart(a).axis != chart(b).axis; }

CubePoint::CubePoint(Face face, Rational u, Rational v) {
    if (abs(u) > kHalf || abs(v) > kHalf) throw DomainError("cube face coordinates must lie in [-1/2, 1/2]");
    *this = from_position(to_position(face, u, v));
}

CubePoint CubePoint::from_position(const Vec& p) {
    if (p.size() != 3) throw DimensionMismatch("cube positions have 3 coordinates");
    for (const auto& c : p)
        if (abs(c) > kHalf) throw DomainError("point outside the cube");
    for (Face f : kAllFaces) {
        if (!on_face(f, p)) continue;
        CubePoint out;
        out.face_ = f;
        Vec l = to_local(f, p);
        out.u_ = l[0];
        out.v_ = l[1];
        return out;
    }
    throw DomainError("point is not on the cube surface");
}

Vec CubePoint::position() const { return to_position(face_, u_, v_); }

std::vector<Face> CubePoint::faces() const {
    std::vector<Face> out;
    const Vec p = position();
    for (Face f : kAllFaces)
        if (on_face(f, p)) out.push_back(f);
    return out;
}

CubePoint cube_corner_p() { return CubePoint(Face::zm, -kHalf, -kHalf); }
CubePoint cube_corner_q() { return CubePoint(Face::zp, kHalf, -kHalf); }

Vec rotate_about_corners(const Vec& p, int times) {
    Vec out = p;
    times = ((times % 3) + 3) % 3;
    for (int i = 0; i < times; ++i) out = {out[2], out[0], out[1]};
    return out;
}

CubePoint rotate_about_corners(const CubePoint& point, int times) {
    return CubePoint::from_position(rotate_about_corners(point.position(), times));
}

Face rotate_about_corners(Face face, int times) {
    // The face is determined by the image of its center.
    const Vec c = rotate_about_corners(center(face), times);
    for (Face f : kAllFaces)
        if (center(f) == c) return f;
    throw Error("rotation lost a face");
}

// ---------------------------------------------------------------- unfolding

Polyline UnfoldedPath::surface_polyline() const {
    Polyline p;
    p.vertices = trace;
    p.params = params;
    p.chart = "cube-3d";
    return p;
}

std::string UnfoldedPath::label() const {
    const auto& table = label_table();
    if (auto it = table.find(face_sequence); it != table.end()) return it->second;
    if (face_sequence.size() == 2 && trace.front() == cube_corner_p().position() &&
        trace.back() == cube_corner_q().position()) {
        for (std::size_t i = 0; i < kCornerPaths.size(); ++i)
            if (kCornerPaths[i].first == face_sequence[0] && kCornerPaths[i].second == face_sequence[1])
                return "D" + std::to_string(i + 1);
    }
    return {};
}

std::optional<UnfoldedPath> unfold(const std::vector<Face>& faces, const CubePoint& x, const CubePoint& y) {
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if (faces[i] == faces[j]) throw DomainError("face sequence repeats a face");
    return unfold_sequence(build_sequence(faces), x, y);
}

std::vector<UnfoldedPath> cube_paths(const CubePoint& x, const CubePoint& y, std::size_t max_faces) {
    if (max_faces == 0 || max_faces > kCachedFaces)
        throw DomainError("face sequence bound must be in 1.." + std::to_string(kCachedFaces));
    const auto& cache = sequence_cache();
    const auto y_faces = y.faces();
    std::vector<UnfoldedPath> found;
    for (Face start : x.faces()) {
        for (const auto& s : cache[static_cast<std::size_t>(start)]) {
            if (s.faces.size() > max_faces) continue;
            if (std::find(y_faces.begin(), y_faces.end(), s.faces.back()) == y_faces.end()) continue;
            if (auto p = unfold_sequence(s, x, y)) found.push_back(std::move(*p));
        }
    }
    std::sort(found.begin(), found.end(), sequence_less);
    std::vector<UnfoldedPath> out;
    for (auto& p : found) {
        bool duplicate = std::any_of(out.begin(), out.end(), [&](const UnfoldedPath& q) { return q.trace == p.trace; });
        if (!duplicate) out.push_back(std::move(p));
    }
    return out;
}

std::vector<UnfoldedPath> cube_geodesics(const CubePoint& x, const CubePoint& y, std::size_t max_faces) {
    auto paths = cube_paths(x, y, max_faces);
    if (paths.empty()) throw Error("no admissible path found");
    const Rational best = paths.front().squared_length;
    paths.erase(std::remove_if(paths.begin(), paths.end(),
                               [&](const UnfoldedPath& p) { return p.squared_length != best; }),
                paths.end());
    return paths;
}

const std::vector<Face>& candidate_sequence(char family, int index) {
    if (index < 1 || index > 12) throw DomainError("candidate index must be in 1..12");
    static const std::array<std::array<std::vector<Face>, 12>, 3> families = [] {
        std::array<std::array<std::vector<Face>, 12>, 3> f;
        for (std::size_t i = 0; i < 12; ++i) {
            f[0][i] = kFamilyA[i];
            f[1][i] = rotated(kFamilyA[i], 2);
            f[2][i] = rotated(kFamilyA[i], 1);
        }
        return f;
    }();
    switch (family) {
    case 'A': return families[0][static_cast<std::size_t>(index - 1)];
    case 'B': return families[1][static_cast<std::size_t>(index - 1)];
    case 'C': return families[2][static_cast<std::size_t>(index - 1)];
    default: throw DomainError(std::string("unknown path family '") + family + "'");
    }
}

// ------------------------------------------------------------ formula tables

CandidateTable opposite_face_table(const Vec& x, const Vec& y) {
    if (x.size() != 2 || y.size() != 2) throw DimensionMismatch("face coordinates have 2 entries");
    for (const auto& c : x) require_open(c, "x");
    for (const auto& c : y) require_open(c, "y");
    const Rational &x1 = x[0], &x2 = x[1], &y1 = y[0], &y2 = y[1];

    CandidateTable t;
    t.L_sq = {
        sq(x1 - y1) + sq(2 - x2 + y2),
        sq(1 - x1 + y2) + sq(2 - x2 - y1),
        sq(1 - x2 - y1) + sq(2 - x1 + y2),
        sq(x2 + y2) + sq(2 - x1 - y1),
        sq(1 + x2 - y1) + sq(2 - x1 - y2),
        sq(1 - x1 - y2) + sq(2 + x2 - y1),
        sq(x1 - y1) + sq(2 + x2 - y2),
        sq(1 + x1 - y2) + sq(2 + x2 + y1),
        sq(1 + x2 + y1) + sq(2 + x1 - y2),
        sq(x2 + y2) + sq(2 + x1 + y1),
        sq(1 - x2 + y1) + sq(2 + x1 + y2),
        sq(1 + x1 + y2) + sq(2 - x2 + y1),
    };
    t.N = n_values(x1, x2, y1, y2);
    t.common = x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2 + 4;

    const CubePoint px(Face::zm, x1, x2), py(Face::zp, y1, y2);
    for (int i = 0; i < 12; ++i)
        t.admissible[static_cast<std::size_t>(i)] = unfold(candidate_sequence('A', i + 1), px, py).has_value();
    return t;
}

std::array<Rational, 12> diagonal_table(const Rational& xd, const Rational& yd) {
    if (xd <= 0 || xd >= kHalf || yd <= 0 || yd >= kHalf)
        throw DomainError("diagonal coordinates must lie in (0, 1/2)");
    const Rational h = kHalf, d = xd - yd, p = xd * yd, s = xd + yd;
    return {
        2 * d,
        h + 3 * d - 2 * p,
        h + 3 * d - 2 * p,
        2 * d,
        h + s + 2 * p,
        h - s + 2 * p,
        -2 * d,
        h - 3 * d - 2 * p,
        h - 3 * d - 2 * p,
        -2 * d,
        h - s + 2 * p,
        h + s + 2 * p,
    };
}

// ---------------------------------------------------------------- witnesses

namespace {

WitnessPair make_witness(std::string name, const Rational& x1, const Rational& x2, const Rational& y1,
                         const Rational& y2) {
    for (const Rational* c : {&x1, &x2, &y1, &y2}) require_open(*c, name.c_str());
    WitnessPair w{std::move(name), CubePoint(Face::zm, x1, x2), CubePoint(Face::zp, y1, y2), {}};
    for (const auto& g : cube_geodesics(w.x, w.y)) w.geodesics.push_back(g.label());
    std::sort(w.geodesics.begin(), w.geodesics.end(), label_less);
    return w;
}

} // namespace

WitnessSet witness_sequences(int i, int j, int k) {
    if (i < 1 || j < 1 || k < 1) throw DomainError("witness indices must be positive");
    const Rational f(1, 5 * i), g(1, 5 * j), e(1, 100 * k);
    const Rational y1 = kHalf - f, y2 = -kHalf + f;
    const Rational s = -kHalf + f;
    const Rational r = s + g;
    const std::string ij = std::to_string(i) + "," + std::to_string(j);

    WitnessSet w{
        make_witness("s_A^" + std::to_string(i), s, s, y1, y2),
        make_witness("r_" + std::to_string(i) + "I^" + std::to_string(j), r, r, y1, y2),
        std::nullopt,
        make_witness("t_" + ij + "I^" + std::to_string(k), r, r + e, y1, y2),
        make_witness("t_" + ij + "II^" + std::to_string(k), r + e, r, y1, y2),
    };
    if (j > i) w.r_II = make_witness("r_" + std::to_string(i) + "II^" + std::to_string(j), s - g, s - g, y1, y2);
    return w;
}

int witness_min_k(int i, int j, bool second) {
    if (i < 1 || j < 1) throw DomainError("witness indices must be positive");
    const Rational f(1, 5 * i), g(1, 5 * j);
    const Rational y1 = kHalf - f, y2 = -kHalf + f, r = -kHalf + f + g;
    auto n_at = [&](const Rational& eps) {
        return second ? n_values(r + eps, r, y1, y2) : n_values(r, r + eps, y1, y2);
    };
    const auto n0 = n_at(0), n1 = n_at(1);
    const std::size_t target = second ? 3 : 0;
    int k_min = 1;
    for (std::size_t m : {0u, 3u, 6u, 9u}) {
        if (m == target) continue;
        // N_m - N_target = c0 + c1 * eps, which must stay positive on (0, 1/(100k)].
        const Rational c0 = n0[m] - n0[target];
        const Rational c1 = (n1[m] - n1[target]) - c0;
        if (c0 < 0 || (c0 == 0 && c1 <= 0))
            throw DomainError("perturbation never separates the target path");
        if (c0 > 0 && c1 < 0) {
            const Rational bound = -c1 / (100 * c0);
            const int k = static_cast<int>(floor(bound).get_si()) + 1;
            k_min = std::max(k_min, k);
        }
    }
    return k_min;
}

// ------------------------------------------------------------------ corners

const std::map<std::string, std::string>& corner_limit_table() {
    static const std::map<std::string, std::string> table{
        {"A1", "D3"}, {"A4", "D4"}, {"A7", "D6"}, {"A10", "D1"},
        {"B1", "D5"}, {"B4", "D6"}, {"B7", "D2"}, {"B10", "D3"},
        {"C1", "D1"}, {"C4", "D2"}, {"C7", "D4"}, {"C10", "D5"},
    };
    return table;
}

std::vector<UnfoldedPath> corner_geodesics() {
    auto paths = cube_geodesics(cube_corner_p(), cube_corner_q());
    std::sort(paths.begin(), paths.end(),
              [](const UnfoldedPath& a, const UnfoldedPath& b) { return label_less(a.label(), b.label()); });
    return paths;
}

StratPoset cube_corner_poset() {
    StratPoset p;
    p.name = "cube_corner";
    const std::map<std::string, std::string>& limits = corner_limit_table();
    for (const char family : {'A', 'B', 'C'}) {
        const std::string F(1, family);
        auto lab = [&](int n) { return F + std::to_string(n); };
        for (int n : {1, 4, 7, 10}) p.elements.push_back({"t:" + lab(n), 1, {lab(n)}});
        p.elements.push_back({"r:" + lab(1) + "," + lab(4), 2, {lab(1), lab(4)}});
        p.elements.push_back({"r:" + lab(7) + "," + lab(10), 2, {lab(7), lab(10)}});
        p.elements.push_back({"s:" + F, 3, {lab(1), lab(4), lab(7), lab(10)}});

        for (auto [a, b] : {std::pair{1, 4}, std::pair{7, 10}}) {
            const std::string r = "r:" + lab(a) + "," + lab(b);
            p.covers.push_back({"t:" + lab(a), r, {{lab(a), lab(a)}}});
            p.covers.push_back({"t:" + lab(b), r, {{lab(b), lab(b)}}});
            p.covers.push_back({r, "s:" + F, {{lab(a), lab(a)}, {lab(b), lab(b)}}});
        }
        PosetCover to_corner{"s:" + F, "corner", {}};
        for (int n : {1, 4, 7, 10}) to_corner.map[lab(n)] = limits.at(lab(n));
        p.covers.push_back(std::move(to_corner));
    }
    p.elements.push_back({"corner", 4, {"D1", "D2", "D3", "D4", "D5", "D6"}});
    return p;
}

} // namespace geoplan
