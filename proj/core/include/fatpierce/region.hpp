#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "fatpierce/geometry.hpp"
#include "fatpierce/interval.hpp"

namespace fatpierce {

// Scalar affine in the sweep parameter d: k0 + kd * d.
struct Coef {
    double k0 = 0.0;
    double kd = 0.0;

    double eval(double d) const { return k0 + kd * d; }
    Interval eval(Interval d) const { return Interval(k0) + Interval(kd) * d; }
    static Coef constant(double v) { return {v, 0.0}; }
};

enum class BoxClass { Inside, Outside, Unknown };

struct Region;
using RegionPtr = std::shared_ptr<const Region>;

struct DiskExpr {
    Coef cx, cy, radius;
};
struct HStripExpr {
    Coef top, bottom;  // bottom <= y <= top
};
struct HalfPlaneUpExpr {
    Coef a;  // y >= a
};
struct HalfPlaneDownExpr {
    Coef a;  // y <= a
};
struct RectExpr {
    Coef xlo, xhi, ylo, yhi;  // degenerate (point/segment) allowed
};
struct IntersectExpr {
    std::vector<RegionPtr> kids;
};
struct UnionExpr {
    std::vector<RegionPtr> kids;
};

struct Region {
    std::variant<DiskExpr, HStripExpr, HalfPlaneUpExpr, HalfPlaneDownExpr, RectExpr,
                 IntersectExpr, UnionExpr>
        node;
};

RegionPtr region_disk(Coef cx, Coef cy, Coef radius);
RegionPtr region_hstrip(double top, double bottom);
RegionPtr region_halfplane_up(double a);
RegionPtr region_halfplane_down(double a);
RegionPtr region_rect(Coef xlo, Coef xhi, Coef ylo, Coef yhi);
RegionPtr region_intersect(std::vector<RegionPtr> kids);
RegionPtr region_union(std::vector<RegionPtr> kids);

// Sound three-valued membership of an axis box for every d in the interval:
// Inside  => every point of the box is in the region for every d,
// Outside => no point of the box is in the region for any d.
BoxClass classify_box(const Region& r, Interval x, Interval y, Interval d);

// Plain closed-arithmetic membership at a concrete parameter value.
bool region_contains(const Region& r, Point p, double d);

}  // namespace fatpierce
