#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace fatpierce {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

double dist(Point p, Point q);
double dist2(Point p, Point q);
double norm(Point p);

// z-component of (b-a) x (c-a); positive for a left turn.
double cross(Point a, Point b, Point c);

// Closed disk. radius >= 0.
struct Disk {
    Point center;
    double radius = 0.0;
};

bool disk_contains(const Disk& d, Point p, double tol = 0.0);

struct CoincidentCircles : std::invalid_argument {
    CoincidentCircles() : std::invalid_argument("coincident circles") {}
};

// Intersection points of the two boundary circles (0, 1 or 2 points).
// Throws CoincidentCircles for identical circles.
std::vector<Point> circle_circle_intersections(const Disk& a, const Disk& b);

// Counterclockwise, strictly convex, >= 3 vertices.
struct ConvexPolygon {
    std::vector<Point> vertices;
};

// Counterclockwise, simple, >= 3 vertices.
struct SimplePolygon {
    std::vector<Point> vertices;
};

bool is_strictly_convex_ccw(const std::vector<Point>& vs);
bool is_simple_ccw(const std::vector<Point>& vs);
double polygon_area(const std::vector<Point>& vs);

// max over edges of the signed distance to the edge line (outward positive).
// Negative strictly inside, 0 on the boundary. For exterior points this is a
// lower bound on the true distance, with the correct sign.
double convex_signed_distance(const ConvexPolygon& poly, Point p);
bool convex_contains(const ConvexPolygon& poly, Point p, double tol = 0.0);

// Closed containment, crossing number with on-boundary counted inside.
bool point_in_polygon(Point p, const SimplePolygon& poly, double boundary_tol = 1e-12);

// Euclidean distance from p to the closed polygonal region (0 if inside).
double distance_to_convex(const ConvexPolygon& poly, Point p);
double distance_to_simple(const SimplePolygon& poly, Point p);

double point_segment_distance(Point p, Point a, Point b);

// Proper and touching intersections of closed segments [a,b] and [c,d];
// returns 0-2 points (2 only for the endpoints of a collinear overlap).
std::vector<Point> segment_segment_intersections(Point a, Point b, Point c, Point d);

// Intersections of a circle boundary with the closed segment [a,b].
std::vector<Point> circle_segment_intersections(const Disk& disk, Point a, Point b);

struct ConvexIntersection {
    std::optional<ConvexPolygon> polygon;   // present iff the intersection has area
    std::optional<Point> witness;           // a common point when degenerate but non-empty
    bool empty() const { return !polygon && !witness; }
};

ConvexIntersection convex_intersect(const ConvexPolygon& a, const ConvexPolygon& b);

// Rigid motion p -> M p + t, optionally with a reflection folded into M.
struct Transform {
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    double tx = 0, ty = 0;

    Point apply(Point p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }
    Transform inverse() const;
    static Transform identity() { return {}; }
    // Reflection about the x axis composed after this transform.
    Transform then_reflect_y() const;
};

}  // namespace fatpierce
