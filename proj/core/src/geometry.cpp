#include "fatpierce/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fatpierce {

double dist2(Point p, Point q) {
    const double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

double dist(Point p, Point q) { return std::sqrt(dist2(p, q)); }

double norm(Point p) { return std::hypot(p.x, p.y); }

double cross(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool disk_contains(const Disk& d, Point p, double tol) {
    return dist(d.center, p) <= d.radius + tol;
}

std::vector<Point> circle_circle_intersections(const Disk& a, const Disk& b) {
    const double d2 = dist2(a.center, b.center);
    if (d2 == 0.0 && a.radius == b.radius) throw CoincidentCircles{};
    const double d = std::sqrt(d2);
    if (d == 0.0) return {};  // concentric, distinct radii
    // x along the center line where the radical line crosses it.
    const double x = (d2 + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    double h2 = a.radius * a.radius - x * x;
    if (h2 < -1e-12) return {};
    h2 = std::max(h2, 0.0);
    const double h = std::sqrt(h2);
    const Point u{(b.center.x - a.center.x) / d, (b.center.y - a.center.y) / d};
    const Point base{a.center.x + x * u.x, a.center.y + x * u.y};
    if (h == 0.0) return {base};
    return {Point{base.x - h * u.y, base.y + h * u.x},
            Point{base.x + h * u.y, base.y - h * u.x}};
}

bool is_strictly_convex_ccw(const std::vector<Point>& vs) {
    const size_t n = vs.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const Point a = vs[i], b = vs[(i + 1) % n], c = vs[(i + 2) % n];
        if (cross(a, b, c) <= 0.0) return false;
    }
    return true;
}

double polygon_area(const std::vector<Point>& vs) {
    double s = 0.0;
    const size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
        const Point a = vs[i], b = vs[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

static bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0;
}

bool is_simple_ccw(const std::vector<Point>& vs) {
    const size_t n = vs.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Point a = vs[i], b = vs[(i + 1) % n];
            const Point c = vs[j], d = vs[(j + 1) % n];
            if ((i + 1) % n == j || (j + 1) % n == i) continue;  // adjacent
            if (segments_properly_cross(a, b, c, d)) return false;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (vs[i] == vs[j]) return false;
    return polygon_area(vs) > 0.0;
}

double convex_signed_distance(const ConvexPolygon& poly, Point p) {
    double best = -1e300;
    const auto& vs = poly.vertices;
    const size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
        const Point a = vs[i], b = vs[(i + 1) % n];
        const double len = dist(a, b);
        if (len == 0.0) continue;
        // outward normal of a ccw edge points right of a->b
        const double sd = -cross(a, b, p) / len;
        best = std::max(best, sd);
    }
    return best;
}

bool convex_contains(const ConvexPolygon& poly, Point p, double tol) {
    return convex_signed_distance(poly, p) <= tol;
}

double point_segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, {a.x + t * ab.x, a.y + t * ab.y});
}

bool point_in_polygon(Point p, const SimplePolygon& poly, double boundary_tol) {
    const auto& vs = poly.vertices;
    const size_t n = vs.size();
    for (size_t i = 0; i < n; ++i)
        if (point_segment_distance(p, vs[i], vs[(i + 1) % n]) <= boundary_tol) return true;
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = vs[i], b = vs[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double distance_to_convex(const ConvexPolygon& poly, Point p) {
    if (convex_contains(poly, p)) return 0.0;
    double best = 1e300;
    const auto& vs = poly.vertices;
    for (size_t i = 0; i < vs.size(); ++i)
        best = std::min(best, point_segment_distance(p, vs[i], vs[(i + 1) % vs.size()]));
    return best;
}

double distance_to_simple(const SimplePolygon& poly, Point p) {
    if (point_in_polygon(p, poly)) return 0.0;
    double best = 1e300;
    const auto& vs = poly.vertices;
    for (size_t i = 0; i < vs.size(); ++i)
        best = std::min(best, point_segment_distance(p, vs[i], vs[(i + 1) % vs.size()]));
    return best;
}

std::vector<Point> segment_segment_intersections(Point a, Point b, Point c, Point d) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (segments_properly_cross(a, b, c, d)) {
        const double t = d1 / (d1 - d2);
        return {Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}};
    }
    std::vector<Point> out;
    auto on_seg = [](Point q, Point s, Point e) {
        return cross(s, e, q) == 0.0 && std::min(s.x, e.x) <= q.x && q.x <= std::max(s.x, e.x) &&
               std::min(s.y, e.y) <= q.y && q.y <= std::max(s.y, e.y);
    };
    auto push_unique = [&out](Point q) {
        for (const Point& r : out)
            if (dist(r, q) <= 1e-12) return;
        out.push_back(q);
    };
    if (d1 == 0 && on_seg(a, c, d)) push_unique(a);
    if (d2 == 0 && on_seg(b, c, d)) push_unique(b);
    if (d3 == 0 && on_seg(c, a, b)) push_unique(c);
    if (d4 == 0 && on_seg(d, a, b)) push_unique(d);
    if (out.size() > 2) out.resize(2);
    return out;
}

std::vector<Point> circle_segment_intersections(const Disk& disk, Point a, Point b) {
    const Point d = b - a;
    const Point f = a - disk.center;
    const double A = d.x * d.x + d.y * d.y;
    if (A == 0.0) return {};
    const double B = 2.0 * (f.x * d.x + f.y * d.y);
    const double C = f.x * f.x + f.y * f.y - disk.radius * disk.radius;
    double disc = B * B - 4 * A * C;
    if (disc < -1e-12) return {};
    disc = std::max(disc, 0.0);
    const double sq = std::sqrt(disc);
    std::vector<Point> out;
    for (const double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
        if (t < -1e-12 || t > 1.0 + 1e-12) continue;
        const double tc = std::clamp(t, 0.0, 1.0);
        const Point q{a.x + tc * d.x, a.y + tc * d.y};
        bool dup = false;
        for (const Point& r : out) dup = dup || dist(r, q) <= 1e-12;
        if (!dup) out.push_back(q);
    }
    return out;
}

ConvexIntersection convex_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
    // Sutherland-Hodgman, clipping a by the half-planes of b.
    std::vector<Point> cur = a.vertices;
    const auto& bs = b.vertices;
    for (size_t i = 0; i < bs.size() && !cur.empty(); ++i) {
        const Point e0 = bs[i], e1 = bs[(i + 1) % bs.size()];
        std::vector<Point> next;
        for (size_t j = 0; j < cur.size(); ++j) {
            const Point p = cur[j], q = cur[(j + 1) % cur.size()];
            const double sp = cross(e0, e1, p);
            const double sq = cross(e0, e1, q);
            if (sp >= 0) next.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                const double t = sp / (sp - sq);
                next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        cur = std::move(next);
    }
    // collapse near-duplicate vertices
    std::vector<Point> vs;
    for (const Point& p : cur) {
        bool dup = false;
        for (const Point& q : vs) dup = dup || dist(p, q) <= 1e-12;
        if (!dup) vs.push_back(p);
    }
    ConvexIntersection out;
    if (vs.empty()) return out;
    if (vs.size() >= 3 && std::abs(polygon_area(vs)) > 1e-18) {
        if (polygon_area(vs) < 0) std::reverse(vs.begin(), vs.end());
        out.polygon = ConvexPolygon{std::move(vs)};
        return out;
    }
    // degenerate segment or point: still a common point
    out.witness = vs.front();
    return out;
}

Transform Transform::inverse() const {
    const double det = m00 * m11 - m01 * m10;
    Transform inv;
    inv.m00 = m11 / det;
    inv.m01 = -m01 / det;
    inv.m10 = -m10 / det;
    inv.m11 = m00 / det;
    inv.tx = -(inv.m00 * tx + inv.m01 * ty);
    inv.ty = -(inv.m10 * tx + inv.m11 * ty);
    return inv;
}

Transform Transform::then_reflect_y() const {
    Transform t = *this;
    t.m10 = -t.m10;
    t.m11 = -t.m11;
    t.ty = -t.ty;
    return t;
}

}  // namespace fatpierce
