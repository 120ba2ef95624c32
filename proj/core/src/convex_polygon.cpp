#include "geoplan/convex_polygon.hpp"

namespace geoplan {
namespace {

Rational cross(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational eval(const HalfPlane& h, const Vec& p) { return h.a * p[0] + h.b * p[1] - h.c; }

} // namespace

HalfPlane bisector_half_plane(const Vec& keep, const Vec& other) {
    // |p-keep|^2 <= |p-other|^2  <=>  2 p.(other-keep) <= |other|^2 - |keep|^2
    HalfPlane h;
    h.a = 2 * (other[0] - keep[0]);
    h.b = 2 * (other[1] - keep[1]);
    h.c = squared_norm(other) - squared_norm(keep);
    return h;
}

std::vector<Vec> box_polygon(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

std::vector<Vec> clip(const std::vector<Vec>& polygon, const HalfPlane& h) {
    std::vector<Vec> out;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& cur = polygon[i];
        const Vec& next = polygon[(i + 1) % n];
        Rational fc = eval(h, cur), fn = eval(h, next);
        if (fc <= 0) out.push_back(cur);
        if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
            Rational t = fc / (fc - fn);
            out.push_back(lerp(cur, next, t));
        }
    }
    out = simplify_polygon(out);
    if (out.size() < 3) out.clear();
    return out;
}

std::vector<Vec> simplify_polygon(const std::vector<Vec>& polygon) {
    std::vector<Vec> pts;
    for (const auto& p : polygon)
        if (pts.empty() || pts.back() != p) pts.push_back(p);
    while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();

    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Vec& prev = pts[(i + pts.size() - 1) % pts.size()];
            const Vec& next = pts[(i + 1) % pts.size()];
            if (cross(prev, pts[i], next) == 0) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return pts;
}

Rational twice_signed_area(const std::vector<Vec>& polygon) {
    Rational a = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Vec& p = polygon[i];
        const Vec& q = polygon[(i + 1) % polygon.size()];
        a += p[0] * q[1] - p[1] * q[0];
    }
    return a;
}

} // namespace geoplan
