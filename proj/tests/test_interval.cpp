#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fatpierce/interval.hpp"

using namespace fatpierce;

namespace {

std::mt19937_64 rng(42);
double u(double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1p-53); }

Interval rand_iv() {
    const double a = u(-10, 10), b = u(-10, 10);
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace

TEST_CASE("outward rounding directions") {
    for (double v : {0.1, -0.1, 1e100, -1e100, 3.0, 0.0}) {
        CHECK(Interval::down(v) < v);
        CHECK(Interval::up(v) > v);
    }
}

TEST_CASE("arithmetic encloses sampled point results") {
    for (int it = 0; it < 2000; ++it) {
        const Interval a = rand_iv(), b = rand_iv();
        const double x = u(a.lo, a.hi), y = u(b.lo, b.hi);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        CHECK((-a).contains(-x));
        CHECK(sqr(a).contains(x * x));
        if (x >= 0.0) CHECK(isqrt(a).contains(std::sqrt(x)));
        CHECK(hull(a, b).contains(x));
        CHECK(hull(a, b).contains(y));
    }
}

TEST_CASE("sqr straddling zero has lower bound exactly zero") {
    const Interval s = sqr(Interval{-2.0, 3.0});
    CHECK(s.lo == 0.0);
    CHECK(s.hi >= 9.0);
    CHECK(sqr(Interval{-3.0, -1.0}).lo <= 1.0);
    CHECK(sqr(Interval{-3.0, -1.0}).lo >= 0.0);
}

TEST_CASE("sqr never goes negative") {
    for (int it = 0; it < 500; ++it) {
        const Interval s = sqr(rand_iv());
        CHECK(s.lo >= 0.0);
        CHECK(s.lo <= s.hi);
    }
}

TEST_CASE("isqrt clamps at zero") {
    CHECK(isqrt(Interval{-1.0, 4.0}).lo == 0.0);
    CHECK(isqrt(Interval{-2.0, -1.0}).lo == 0.0);
    CHECK(isqrt(Interval{4.0, 9.0}).contains(2.0));
    CHECK(isqrt(Interval{4.0, 9.0}).contains(3.0));
}

TEST_CASE("widths stay finite and ordered") {
    for (int it = 0; it < 500; ++it) {
        const Interval a = rand_iv(), b = rand_iv();
        for (const Interval r : {a + b, a - b, a * b, sqr(a), isqrt(a)}) {
            CHECK(r.lo <= r.hi);
            CHECK(std::isfinite(r.lo));
            CHECK(std::isfinite(r.hi));
        }
    }
}

TEST_CASE("mid and contains") {
    const Interval a{1.0, 3.0};
    CHECK(a.mid() == 2.0);
    CHECK(a.contains(1.0));
    CHECK(a.contains(3.0));
    CHECK_FALSE(a.contains(0.999999));
    CHECK(a.width() == 2.0);
}
