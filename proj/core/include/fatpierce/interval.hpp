#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace fatpierce {

// Closed interval with outward ulp-padding after every operation, so the
// exact real result is always enclosed regardless of the FPU rounding mode.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) { assert(l <= h); }

    static double down(double v) {
        return std::nextafter(v, -std::numeric_limits<double>::infinity());
    }
    static double up(double v) {
        return std::nextafter(v, std::numeric_limits<double>::infinity());
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }

    friend Interval operator+(Interval a, Interval b) {
        return {down(a.lo + b.lo), up(a.hi + b.hi)};
    }
    friend Interval operator-(Interval a, Interval b) {
        return {down(a.lo - b.hi), up(a.hi - b.lo)};
    }
    friend Interval operator-(Interval a) { return {-a.hi, -a.lo}; }
    friend Interval operator*(Interval a, Interval b) {
        const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
    }
};

inline Interval sqr(Interval a) {
    const double m = std::max(std::abs(a.lo), std::abs(a.hi));
    double lo;
    if (a.lo <= 0.0 && a.hi >= 0.0) {
        lo = 0.0;
    } else {
        const double n = std::min(std::abs(a.lo), std::abs(a.hi));
        lo = Interval::down(n * n);
        if (lo < 0.0) lo = 0.0;
    }
    return {lo, Interval::up(m * m)};
}

inline Interval isqrt(Interval a) {
    const double lo = a.lo <= 0.0 ? 0.0 : std::max(0.0, Interval::down(std::sqrt(a.lo)));
    return {lo, Interval::up(std::sqrt(std::max(a.hi, 0.0)))};
}

inline Interval hull(Interval a, Interval b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace fatpierce
