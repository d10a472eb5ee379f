#include "fatpierce/generator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fatpierce/pq.hpp"

namespace fatpierce {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    double uniform() { return (eng() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Convex polygon around c: vertices on jittered radii in [r_in, 1], with the
// angular gaps small enough that the inradius stays above r.
Shape make_polygon(Rng& rng, Point c, double r) {
    const int k = 12;
    const double r_in = r / 0.9;
    if (r_in > 0.995) return Disk{c, rng.uniform(r, 1.0)};  // too fat for a polygon
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Point> vs(k);
        for (int i = 0; i < k; ++i) {
            const double ang = 2.0 * kPi * (i + rng.uniform(-0.15, 0.15)) / k;
            const double rad = rng.uniform(r_in, 1.0);
            vs[i] = {c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)};
        }
        if (is_strictly_convex_ccw(vs)) return ConvexPolygon{std::move(vs)};
    }
    std::vector<Point> vs(k);  // regular fallback
    const double rad = 0.5 * (r_in + 1.0);
    for (int i = 0; i < k; ++i) {
        const double ang = 2.0 * kPi * i / k;
        vs[i] = {c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)};
    }
    return ConvexPolygon{std::move(vs)};
}

FatSet make_set(Rng& rng, Point c, double r, double disk_fraction) {
    FatSet s;
    s.witness_center = c;
    s.core_radius = r;
    if (rng.uniform() < disk_fraction)
        s.shape = Disk{c, rng.uniform(r, 1.0)};
    else
        s.shape = make_polygon(rng, c, r);
    return s;
}

// Witness center at most reach from the hub, so the hub sits inside the
// guaranteed core B(c, r) with margin 0.05 r.
Point near_hub(Rng& rng, Point hub, double reach, bool left_half = false) {
    const double ang = left_half ? rng.uniform(0.5 * kPi, 1.5 * kPi) : rng.uniform(0.0, 2.0 * kPi);
    const double d = reach * rng.uniform();
    return {hub.x + d * std::cos(ang), hub.y + d * std::sin(ang)};
}

Family build_22(const GenSpec& spec, Rng& rng) {
    Family f;
    f.r = spec.r;
    f.mode = Mode::Property22;
    const Point hub{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double reach = 0.95 * spec.r;
    for (int i = 0; i < spec.n; ++i)
        f.sets.push_back(make_set(rng, near_hub(rng, hub, reach), spec.r, spec.disk_fraction));
    return f;
}

Family build_43(const GenSpec& spec, Rng& rng) {
    Family f;
    f.r = spec.r;
    f.mode = Mode::Property43;
    if (spec.n == 1) {
        f.sets.push_back(make_set(rng, {0.0, 0.0}, spec.r, spec.disk_fraction));
        return f;
    }

    const double d = spec.anchor_distance;
    const Point a{0.0, 0.0}, b{d, 0.0};
    const double anchor_cap = std::min(1.0, 0.5 * (d - 0.05));
    if (anchor_cap < spec.r)
        throw std::runtime_error("generate: anchors cannot be disjoint and r-fat at this distance");
    const double rho_a = rng.uniform(spec.r, anchor_cap);
    const double rho_b = rng.uniform(spec.r, anchor_cap);
    f.sets.push_back({Disk{a, rho_a}, a, spec.r});
    f.sets.push_back({Disk{b, rho_b}, b, spec.r});

    const double hub_off = std::min(0.3, 0.5 * spec.r);
    const Point hub_b{b.x - hub_off, 0.0};
    const double reach = 0.95 * spec.r;

    for (int i = 2; i < spec.n; ++i) {
        // occasionally a bridge: a disk containing the B-side hub that also
        // meets A, keeping every trio inside {non-A sets} concurrent at hub_b
        const bool want_bridge = rng.uniform() < 0.25;
        const double rho = rng.uniform(std::max(0.95, spec.r), 1.0);
        const double cx_lo = hub_b.x - (rho - 0.05 * spec.r);
        const double cx_hi = std::min(rho + rho_a - 0.05, hub_b.x);
        if (want_bridge && cx_lo <= cx_hi) {
            const double cx = rng.uniform(cx_lo, cx_hi);
            const double slack = (rho - 0.05 * spec.r) - (hub_b.x - cx);
            const double cy = rng.uniform(-1.0, 1.0) * std::min(0.05, std::max(slack, 0.0));
            f.sets.push_back({Disk{{cx, cy}, rho}, {cx, cy}, spec.r});
        } else {
            // cluster set; kept on the A-facing half so the anchors stay the
            // diameter pair
            f.sets.push_back(make_set(rng, near_hub(rng, hub_b, reach, /*left_half=*/true),
                                      spec.r, spec.disk_fraction));
        }
    }
    return f;
}

bool valid(const Family& f) {
    for (const FatSet& s : f.sets)
        if (!verify_fatness(s.shape, s.witness_center, f.r)) return false;
    if (f.mode == Mode::Property22) return has_pq_property(f, 2, 2).holds;
    return has_pq_property(f, 4, 3).holds;
}

}  // namespace

Family generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate: n must be at least 1");
    if (!(spec.r > 0.0 && spec.r <= 1.0))
        throw std::invalid_argument("generate: r must be in (0, 1]");
    for (int attempt = 0; attempt < 100; ++attempt) {
        Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + attempt);
        Family f = spec.mode == Mode::Property22 ? build_22(spec, rng) : build_43(spec, rng);
        if (valid(f)) return f;
    }
    throw std::runtime_error("generate: validation failed after 100 attempts");
}

}  // namespace fatpierce
