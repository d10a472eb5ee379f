#include "fatpierce/region.hpp"

namespace fatpierce {

namespace {

RegionPtr make(Region r) { return std::make_shared<const Region>(std::move(r)); }

// Inside iff lhs <= rhs certainly; Outside iff lhs > rhs certainly.
BoxClass cmp_le(Interval lhs, Interval rhs) {
    if (lhs.hi <= rhs.lo) return BoxClass::Inside;
    if (lhs.lo > rhs.hi) return BoxClass::Outside;
    return BoxClass::Unknown;
}

BoxClass combine_intersect(BoxClass a, BoxClass b) {
    if (a == BoxClass::Outside || b == BoxClass::Outside) return BoxClass::Outside;
    if (a == BoxClass::Inside && b == BoxClass::Inside) return BoxClass::Inside;
    return BoxClass::Unknown;
}

BoxClass combine_union(BoxClass a, BoxClass b) {
    if (a == BoxClass::Inside || b == BoxClass::Inside) return BoxClass::Inside;
    if (a == BoxClass::Outside && b == BoxClass::Outside) return BoxClass::Outside;
    return BoxClass::Unknown;
}

}  // namespace

RegionPtr region_disk(Coef cx, Coef cy, Coef radius) {
    return make(Region{DiskExpr{cx, cy, radius}});
}
RegionPtr region_hstrip(double top, double bottom) {
    return make(Region{HStripExpr{Coef::constant(top), Coef::constant(bottom)}});
}
RegionPtr region_halfplane_up(double a) {
    return make(Region{HalfPlaneUpExpr{Coef::constant(a)}});
}
RegionPtr region_halfplane_down(double a) {
    return make(Region{HalfPlaneDownExpr{Coef::constant(a)}});
}
RegionPtr region_rect(Coef xlo, Coef xhi, Coef ylo, Coef yhi) {
    return make(Region{RectExpr{xlo, xhi, ylo, yhi}});
}
RegionPtr region_intersect(std::vector<RegionPtr> kids) {
    return make(Region{IntersectExpr{std::move(kids)}});
}
RegionPtr region_union(std::vector<RegionPtr> kids) {
    return make(Region{UnionExpr{std::move(kids)}});
}

BoxClass classify_box(const Region& r, Interval x, Interval y, Interval d) {
    return std::visit(
        [&](const auto& node) -> BoxClass {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, DiskExpr>) {
                const Interval dist2 = sqr(x - node.cx.eval(d)) + sqr(y - node.cy.eval(d));
                return cmp_le(dist2, sqr(node.radius.eval(d)));
            } else if constexpr (std::is_same_v<T, HStripExpr>) {
                const Interval top = node.top.eval(d), bot = node.bottom.eval(d);
                if (y.lo >= bot.hi && y.hi <= top.lo) return BoxClass::Inside;
                if (y.hi < bot.lo || y.lo > top.hi) return BoxClass::Outside;
                return BoxClass::Unknown;
            } else if constexpr (std::is_same_v<T, HalfPlaneUpExpr>) {
                const Interval a = node.a.eval(d);
                if (y.lo >= a.hi) return BoxClass::Inside;
                if (y.hi < a.lo) return BoxClass::Outside;
                return BoxClass::Unknown;
            } else if constexpr (std::is_same_v<T, HalfPlaneDownExpr>) {
                const Interval a = node.a.eval(d);
                if (y.hi <= a.lo) return BoxClass::Inside;
                if (y.lo > a.hi) return BoxClass::Outside;
                return BoxClass::Unknown;
            } else if constexpr (std::is_same_v<T, RectExpr>) {
                const Interval xlo = node.xlo.eval(d), xhi = node.xhi.eval(d);
                const Interval ylo = node.ylo.eval(d), yhi = node.yhi.eval(d);
                if (xlo.lo > xhi.hi || ylo.lo > yhi.hi) return BoxClass::Outside;  // empty
                if (x.lo >= xlo.hi && x.hi <= xhi.lo && y.lo >= ylo.hi && y.hi <= yhi.lo)
                    return BoxClass::Inside;
                if (x.hi < xlo.lo || x.lo > xhi.hi || y.hi < ylo.lo || y.lo > yhi.hi)
                    return BoxClass::Outside;
                return BoxClass::Unknown;
            } else if constexpr (std::is_same_v<T, IntersectExpr>) {
                BoxClass acc = BoxClass::Inside;
                for (const RegionPtr& kid : node.kids) {
                    acc = combine_intersect(acc, classify_box(*kid, x, y, d));
                    if (acc == BoxClass::Outside) break;
                }
                return acc;
            } else {
                BoxClass acc = BoxClass::Outside;
                for (const RegionPtr& kid : node.kids) {
                    acc = combine_union(acc, classify_box(*kid, x, y, d));
                    if (acc == BoxClass::Inside) break;
                }
                return acc;
            }
        },
        r.node);
}

bool region_contains(const Region& r, Point p, double d) {
    return std::visit(
        [&](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, DiskExpr>) {
                const double dx = p.x - node.cx.eval(d), dy = p.y - node.cy.eval(d);
                const double rad = node.radius.eval(d);
                return dx * dx + dy * dy <= rad * rad;
            } else if constexpr (std::is_same_v<T, HStripExpr>) {
                return node.bottom.eval(d) <= p.y && p.y <= node.top.eval(d);
            } else if constexpr (std::is_same_v<T, HalfPlaneUpExpr>) {
                return p.y >= node.a.eval(d);
            } else if constexpr (std::is_same_v<T, HalfPlaneDownExpr>) {
                return p.y <= node.a.eval(d);
            } else if constexpr (std::is_same_v<T, RectExpr>) {
                return node.xlo.eval(d) <= p.x && p.x <= node.xhi.eval(d) &&
                       node.ylo.eval(d) <= p.y && p.y <= node.yhi.eval(d);
            } else if constexpr (std::is_same_v<T, IntersectExpr>) {
                for (const RegionPtr& kid : node.kids)
                    if (!region_contains(*kid, p, d)) return false;
                return true;
            } else {
                for (const RegionPtr& kid : node.kids)
                    if (region_contains(*kid, p, d)) return true;
                return false;
            }
        },
        r.node);
}

}  // namespace fatpierce
