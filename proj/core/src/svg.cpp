#include "fatpierce/svg.hpp"

#include <cmath>
#include <sstream>

namespace fatpierce {

namespace {

struct Canvas {
    double xlo, ylo, span_x, span_y, scale;
    std::ostringstream out;

    Canvas(double x0, double x1, double y0, double y1) {
        const double pad_x = 0.1 * (x1 - x0), pad_y = 0.1 * (y1 - y0);
        xlo = x0 - pad_x;
        ylo = y0 - pad_y;
        span_x = (x1 - x0) + 2 * pad_x;
        span_y = (y1 - y0) + 2 * pad_y;
        scale = 640.0 / std::max(span_x, span_y);
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
            << span_x * scale << ' ' << span_y * scale << "\">\n";
    }

    double X(double x) const { return (x - xlo) * scale; }
    double Y(double y) const { return (ylo + span_y - y) * scale; }  // flip y up

    void circle(Point c, double r, const std::string& style) {
        out << "  <circle cx=\"" << X(c.x) << "\" cy=\"" << Y(c.y) << "\" r=\"" << r * scale
            << "\" " << style << "/>\n";
    }
    void line(double x0, double y0, double x1, double y1, const std::string& style) {
        out << "  <line x1=\"" << X(x0) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(x1)
            << "\" y2=\"" << Y(y1) << "\" " << style << "/>\n";
    }
    void cross(Point p, const std::string& stroke) {
        const double h = 6.0 / scale;
        line(p.x - h, p.y - h, p.x + h, p.y + h, "stroke=\"" + stroke + "\" stroke-width=\"2\"");
        line(p.x - h, p.y + h, p.x + h, p.y - h, "stroke=\"" + stroke + "\" stroke-width=\"2\"");
    }
    void dot(Point p, const std::string& fill) {
        out << "  <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
            << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    }
    void text(double x, double y, const std::string& s) {
        out << "  <text x=\"" << X(x) << "\" y=\"" << Y(y)
            << "\" font-family=\"sans-serif\" font-size=\"18\">" << s << "</text>\n";
    }
    void polygon(const std::vector<Point>& vs, const std::string& style) {
        out << "  <polygon points=\"";
        for (const Point& v : vs) out << X(v.x) << ',' << Y(v.y) << ' ';
        out << "\" " << style << "/>\n";
    }
    std::string finish() {
        out << "</svg>\n";
        return out.str();
    }
};

const char* kRegionStyle =
    "fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";

void draw_region(Canvas& cv, const Region& r, double d) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, DiskExpr>) {
                cv.circle({node.cx.eval(d), node.cy.eval(d)}, node.radius.eval(d), kRegionStyle);
            } else if constexpr (std::is_same_v<T, HStripExpr>) {
                const double x0 = cv.xlo, x1 = cv.xlo + cv.span_x;
                cv.line(x0, node.top.eval(d), x1, node.top.eval(d), kRegionStyle);
                cv.line(x0, node.bottom.eval(d), x1, node.bottom.eval(d), kRegionStyle);
            } else if constexpr (std::is_same_v<T, HalfPlaneUpExpr> ||
                                 std::is_same_v<T, HalfPlaneDownExpr>) {
                cv.line(cv.xlo, node.a.eval(d), cv.xlo + cv.span_x, node.a.eval(d), kRegionStyle);
            } else if constexpr (std::is_same_v<T, RectExpr>) {
                const double x0 = node.xlo.eval(d), x1 = node.xhi.eval(d);
                const double y0 = node.ylo.eval(d), y1 = node.yhi.eval(d);
                if (x0 > x1 || y0 > y1) return;  // empty at this d
                cv.polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, kRegionStyle);
            } else {
                for (const RegionPtr& kid : node.kids) draw_region(cv, *kid, d);
            }
        },
        r.node);
}

}  // namespace

std::string render_claim_svg(const CoverClaim& claim, const std::optional<Counterexample>& cex) {
    Canvas cv(claim.bbox_xlo, claim.bbox_xhi, claim.bbox_ylo, claim.bbox_yhi);
    for (const Disk& dk : claim.disks)
        cv.circle(dk.center, dk.radius,
                  "fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#1f5fa0\" stroke-width=\"1.5\"");
    draw_region(cv, *claim.region, claim.d_lo);
    if (claim.d_hi != claim.d_lo) draw_region(cv, *claim.region, claim.d_hi);
    for (const Disk& dk : claim.disks) cv.dot(dk.center, "#1f5fa0");
    for (const Tangency& t : claim.tangencies) cv.dot(t.point, "#c07000");
    if (cex) cv.cross(cex->point, "#cc0000");
    cv.text(claim.bbox_xlo, claim.bbox_yhi, claim.id);
    return cv.finish();
}

std::string render_family_svg(const Family& f, const std::vector<Point>& pierce) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    auto grow = [&](Point p, double r) {
        x0 = std::min(x0, p.x - r);
        x1 = std::max(x1, p.x + r);
        y0 = std::min(y0, p.y - r);
        y1 = std::max(y1, p.y + r);
    };
    for (const FatSet& s : f.sets) grow(s.witness_center, 1.0);
    if (f.sets.empty()) grow({0, 0}, 1.0);

    Canvas cv(x0, x1, y0, y1);
    for (const FatSet& s : f.sets) {
        const std::string style =
            "fill=\"#58a55c\" fill-opacity=\"0.2\" stroke=\"#2d6a31\" stroke-width=\"1\"";
        if (const Disk* d = std::get_if<Disk>(&s.shape))
            cv.circle(d->center, d->radius, style);
        else if (const ConvexPolygon* c = std::get_if<ConvexPolygon>(&s.shape))
            cv.polygon(c->vertices, style);
        else
            cv.polygon(std::get<SimplePolygon>(s.shape).vertices, style);
        cv.dot(s.witness_center, "#2d6a31");
    }
    for (Point p : pierce) cv.cross(p, "#cc0000");
    return cv.finish();
}

}  // namespace fatpierce
