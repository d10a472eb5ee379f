#include "fatpierce/fatset.hpp"

#include <algorithm>
#include <cmath>

namespace fatpierce {

bool shape_is_convex(const Shape& s) {
    return !std::holds_alternative<SimplePolygon>(s);
}

bool shape_contains(const Shape& s, Point p, double tol) {
    if (const auto* d = std::get_if<Disk>(&s)) return disk_contains(*d, p, tol);
    if (const auto* c = std::get_if<ConvexPolygon>(&s)) return convex_contains(*c, p, tol);
    const auto& sp = std::get<SimplePolygon>(s);
    return distance_to_simple(sp, p) <= std::max(tol, 0.0) || point_in_polygon(p, sp);
}

double shape_distance(const Shape& s, Point p) {
    if (const auto* d = std::get_if<Disk>(&s))
        return std::max(0.0, dist(d->center, p) - d->radius);
    if (const auto* c = std::get_if<ConvexPolygon>(&s)) return distance_to_convex(*c, p);
    return distance_to_simple(std::get<SimplePolygon>(s), p);
}

namespace {

// Largest r with B(c,r) inside the shape; negative when c is outside.
double inner_clearance(const Shape& s, Point c) {
    if (const auto* d = std::get_if<Disk>(&s)) return d->radius - dist(c, d->center);
    const std::vector<Point>* vs = nullptr;
    bool inside = false;
    if (const auto* cp = std::get_if<ConvexPolygon>(&s)) {
        vs = &cp->vertices;
        inside = convex_contains(*cp, c, 0.0);
    } else {
        const auto& sp = std::get<SimplePolygon>(s);
        vs = &sp.vertices;
        inside = point_in_polygon(c, sp);
    }
    double edge = 1e300;
    for (size_t i = 0; i < vs->size(); ++i)
        edge = std::min(edge, point_segment_distance(c, (*vs)[i], (*vs)[(i + 1) % vs->size()]));
    return inside ? edge : -edge;
}

// Smallest R with the shape inside B(c,R).
double outer_reach(const Shape& s, Point c) {
    if (const auto* d = std::get_if<Disk>(&s)) return dist(c, d->center) + d->radius;
    const std::vector<Point>& vs = std::holds_alternative<ConvexPolygon>(s)
                                       ? std::get<ConvexPolygon>(s).vertices
                                       : std::get<SimplePolygon>(s).vertices;
    double far = 0.0;
    for (const Point& v : vs) far = std::max(far, dist(c, v));
    return far;
}

}  // namespace

bool verify_fatness(const Shape& s, Point c, double r) {
    if (r <= 0.0 || r > 1.0) return false;
    if (const auto* vs = std::get_if<ConvexPolygon>(&s)) {
        if (!is_strictly_convex_ccw(vs->vertices)) throw std::invalid_argument("invalid shape");
    } else if (const auto* sp = std::get_if<SimplePolygon>(&s)) {
        if (!is_simple_ccw(sp->vertices)) throw std::invalid_argument("invalid shape");
    } else if (std::get<Disk>(s).radius < 0.0) {
        throw std::invalid_argument("invalid shape");
    }
    return inner_clearance(s, c) >= r - kFatnessTol && outer_reach(s, c) <= 1.0 + kFatnessTol;
}

std::optional<std::pair<Point, double>> certify_fatness(const Shape& s, double r_target) {
    if (const auto* d = std::get_if<Disk>(&s)) {
        if (d->radius >= r_target - kFatnessTol && d->radius <= 1.0)
            return std::make_pair(d->center, std::min(d->radius, 1.0));
        return std::nullopt;
    }
    const std::vector<Point>& vs = std::holds_alternative<ConvexPolygon>(s)
                                       ? std::get<ConvexPolygon>(s).vertices
                                       : std::get<SimplePolygon>(s).vertices;
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Point& v : vs) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    auto score = [&](Point c) {
        const double inner = inner_clearance(s, c);
        if (inner <= 0.0) return -1e300;
        if (outer_reach(s, c) > 1.0 + kFatnessTol) return -1e300;
        return inner;
    };
    Point best{};
    double best_score = -1e300;
    const int grid = 40;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            const Point c{xlo + (xhi - xlo) * i / grid, ylo + (yhi - ylo) * j / grid};
            const double sc = score(c);
            if (sc > best_score) {
                best_score = sc;
                best = c;
            }
        }
    if (best_score == -1e300) return std::nullopt;
    double step = std::max(xhi - xlo, yhi - ylo) / grid;
    while (step > 1e-10) {
        bool improved = false;
        for (const Point d : {Point{step, 0}, Point{-step, 0}, Point{0, step}, Point{0, -step},
                              Point{step, step}, Point{step, -step}, Point{-step, step},
                              Point{-step, -step}}) {
            const Point c = best + d;
            const double sc = score(c);
            if (sc > best_score) {
                best_score = sc;
                best = c;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    const double achieved = std::min(best_score, 1.0);
    if (achieved < r_target - 1e-7) return std::nullopt;
    return std::make_pair(best, achieved);
}

}  // namespace fatpierce
