#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fatpierce/generator.hpp"
#include "fatpierce/pq.hpp"
#include "fatpierce/solver.hpp"

using namespace fatpierce;

namespace {

bool all_pierced(const Family& f, const std::vector<Point>& pts) {
    for (const FatSet& s : f.sets) {
        bool hit = false;
        for (Point p : pts)
            if (shape_contains(s.shape, p, kMembershipTol)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

Family rotated(const Family& f, double th, Point shift) {
    const Transform t{std::cos(th), -std::sin(th), std::sin(th), std::cos(th), shift.x, shift.y};
    Family g = f;
    for (FatSet& s : g.sets) {
        s.witness_center = t.apply(s.witness_center);
        if (auto* d = std::get_if<Disk>(&s.shape)) {
            d->center = t.apply(d->center);
        } else if (auto* c = std::get_if<ConvexPolygon>(&s.shape)) {
            for (Point& v : c->vertices) v = t.apply(v);
        } else {
            for (Point& v : std::get<SimplePolygon>(s.shape).vertices) v = t.apply(v);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("case table constants") {
    const auto c311 = CaseTable::c311();
    CHECK(std::abs(std::hypot(c311[0].x, c311[0].y) - kRadiusLarge) < 1e-12);
    CHECK(CaseTable::c313()[0].y > 0.0);
    CHECK(CaseTable::c313()[1].y < 0.0);
    CHECK(CaseTable::c321().size() == 5);
    CHECK(CaseTable::c322().size() == 3);
}

TEST_CASE("strip_shift") {
    CHECK(strip_shift(1.4, -0.2) == std::pair{1.4, false});
    CHECK(strip_shift(0.3, -1.2) == std::pair{1.2, true});
    CHECK(strip_shift(0.5, -0.5) == std::pair{1.0, false});
    CHECK(strip_shift(kStripMax, 0.0).first == doctest::Approx(kStripMax));
    CHECK_THROWS_AS(strip_shift(-0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(strip_shift(1.95, 0.0), PropertyViolation);  // above sqrt(3.5)

    // returned strip [a-2, a] always contains the (possibly reflected) heights
    std::mt19937_64 rng(5);
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1p-53); };
    for (int it = 0; it < 500; ++it) {
        double hi = u(-kStripMax, kStripMax), lo = u(-kStripMax, hi);
        if (hi - lo > 2.0) continue;
        const auto [a, refl] = strip_shift(hi, lo);
        CHECK(a >= 1.0);
        CHECK(a <= kStripMax + 1e-9);
        const double top = refl ? -lo : hi, bot = refl ? -hi : lo;
        CHECK(top <= a + 1e-12);
        CHECK(bot >= a - 2.0 - 1e-12);
    }
}

TEST_CASE("grid_cover squares fit in r-disks and tile the rectangle") {
    for (double r : {1.0, 0.68, 0.5, 0.3}) {
        const auto pts = grid_cover(r);
        const int k = (int)std::lround(std::sqrt((double)pts.size()));
        CHECK(k * k == (int)pts.size());
        CHECK(k >= std::sqrt(2.0) / r - 1e-9);  // k = ceil(sqrt2 / r)
        const double half = 1.0 / k;            // half side of each square
        CHECK(std::hypot(half, half) <= r + 1e-12);
        for (const Point& p : pts) {
            CHECK(p.x >= kSqrt8 - 2.0 - 1e-12);
            CHECK(p.x <= kSqrt8 + 1e-12);
            CHECK(std::abs(p.y) <= 1.0 + 1e-12);
        }
    }
    CHECK_THROWS_AS(grid_cover(0.0), std::invalid_argument);
}

TEST_CASE("select_diameter_pair matches brute force") {
    std::mt19937_64 rng(17);
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1p-53); };
    for (int it = 0; it < 50; ++it) {
        Family f;
        f.r = 0.9;
        const int n = 2 + (int)(rng() % 6);
        for (int i = 0; i < n; ++i) {
            const Point c{u(-2, 2), u(-2, 2)};
            f.sets.push_back({Disk{c, 0.95}, c, 0.9});
        }
        const NormalizedFrame fr = select_diameter_pair(f);
        double best = -1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                best = std::max(best, dist(f.sets[i].witness_center, f.sets[j].witness_center));
        CHECK(fr.d == doctest::Approx(best).epsilon(1e-12));
        // frame sends the pair onto the x axis at the advertised spots
        const Point b = fr.frame_point(f.sets[fr.b_index].witness_center);
        const Point a = fr.frame_point(f.sets[fr.a_index].witness_center);
        CHECK(std::abs(b.x - kSqrt8) < 1e-9);
        CHECK(std::abs(b.y) < 1e-9);
        CHECK(std::abs(a.x - (kSqrt8 - fr.d)) < 1e-9);
        CHECK(std::abs(a.y) < 1e-9);
    }
}

TEST_CASE("pierce bounds by fatness class") {
    struct Row {
        double r;
        Mode mode;
        int bound;
    };
    const Row rows[] = {{0.85, Mode::Property22, 4}, {0.70, Mode::Property22, 5},
                        {0.50, Mode::Property22, 9}, {0.85, Mode::Property43, 4},
                        {0.70, Mode::Property43, 5}, {0.50, Mode::Property43, 10}};
    for (const Row& row : rows) {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            GenSpec gs{10, row.r, row.mode, 0.6, seed, 2.5 + 0.35 * (seed % 5)};
            const Family f = generate(gs);
            const PiercingResult res = pierce(f);
            CHECK((int)res.points.size() <= row.bound);
            CHECK(all_pierced(f, res.points));
            CHECK((int)res.per_set_hit.size() == (int)f.size());
        }
    }
}

TEST_CASE("pierce rejects property violations") {
    Family f;
    f.r = 0.9;
    f.mode = Mode::Property22;
    f.sets.push_back({Disk{{0, 0}, 1}, {0, 0}, 0.9});
    f.sets.push_back({Disk{{5, 0}, 1}, {5, 0}, 0.9});  // disjoint: (2,2) fails
    CHECK_THROWS_AS(pierce(f), PropertyViolation);
}

TEST_CASE("pierce single set uses its witness center") {
    Family f;
    f.r = 0.8;
    f.sets.push_back({Disk{{3, 4}, 0.9}, {3, 4}, 0.8});
    const PiercingResult res = pierce(f);
    REQUIRE(res.points.size() == 1);
    CHECK(shape_contains(f.sets[0].shape, res.points[0], kMembershipTol));
}

TEST_CASE("rigid-motion equivariance") {
    std::mt19937_64 rng(29);
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1p-53); };
    for (int it = 0; it < 25; ++it) {
        GenSpec gs{8, 0.7, it % 2 ? Mode::Property43 : Mode::Property22, 0.5,
                   (uint64_t)it, 3.0};
        const Family f = generate(gs);
        const double th = u(0, 6.28);
        const Point shift{u(-5, 5), u(-5, 5)};
        const Family g = rotated(f, th, shift);

        const PiercingResult rf = pierce(f);
        const PiercingResult rg = pierce(g);
        REQUIRE(rf.points.size() == rg.points.size());
        CHECK(rf.case_id == rg.case_id);
        const Transform t{std::cos(th), -std::sin(th), std::sin(th), std::cos(th),
                          shift.x, shift.y};
        for (size_t i = 0; i < rf.points.size(); ++i) {
            const Point mapped = t.apply(rf.points[i]);
            CHECK(std::abs(mapped.x - rg.points[i].x) < 1e-6);
            CHECK(std::abs(mapped.y - rg.points[i].y) < 1e-6);
        }
    }
}

TEST_CASE("piercing document round trip") {
    GenSpec gs{6, 0.85, Mode::Property22, 0.5, 99, 3.0};
    const Family f = generate(gs);
    const PiercingResult r = pierce(f);
    const PiercingResult s = load_piercing(save_piercing(r));
    CHECK(s.points.size() == r.points.size());
    CHECK(s.case_id == r.case_id);
    CHECK(s.bound_used == r.bound_used);
    CHECK(save_piercing(s) == save_piercing(r));
}

TEST_CASE("case ids serialize") {
    for (CaseId id : {CaseId::C311, CaseId::C312, CaseId::C313, CaseId::C321, CaseId::C322,
                      CaseId::GRID22, CaseId::GRID43, CaseId::SMALL, CaseId::EMPTY_FAB})
        CHECK(case_id_from_string(to_string(id)) == id);
}
