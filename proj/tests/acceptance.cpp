// Full-scale acceptance run: one pass/fail line per criterion, nonzero exit
// if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fatpierce/certifier.hpp"
#include "fatpierce/generator.hpp"
#include "fatpierce/oracle.hpp"
#include "fatpierce/pq.hpp"
#include "fatpierce/solver.hpp"

using namespace fatpierce;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failed;
}

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

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion1() {
    bool ok = true;
    std::string detail;
    bool f3_d4_discharge = false;
    for (const CoverClaim& claim : paper_claims()) {
        const auto t0 = Clock::now();
        const Certificate cert = certify_cover(claim, 14, 0x1p-12, /*workers=*/1);
        const double secs = seconds_since(t0);
        if (cert.status != CertStatus::Confirmed || secs >= 60.0) ok = false;
        if (claim.id == "F3")
            for (const CellBox& b : cert.tangency_cells)
                if (b.d_hi >= 4.0 - 1e-9) f3_d4_discharge = true;
        detail += claim.id + "=" + to_string(cert.status) + " ";
        if (claim.id == "F3" && f3_d4_discharge)
            std::printf("  F3: exact-tangency discharge at d = 4 [2(2-sqrt2)^2 = (sqrt8-2)^2]\n");
    }
    ok = ok && f3_d4_discharge;
    report(1, "figure-claim certification (depth 14, delta 2^-12, single thread)", ok, detail);
}

void bound_sweep(int idx, const char* name, Mode mode, int n_families) {
    struct Row {
        double r;
        int bound;
    };
    const Row rows22[] = {{0.85, 4}, {0.70, 5}, {0.50, 9}};
    const Row rows43[] = {{0.85, 4}, {0.70, 5}, {0.50, 10}};
    const Row* rows = mode == Mode::Property22 ? rows22 : rows43;
    const double anchor_ds[] = {2.5, 3.0, 3.5, 3.9};
    int failures = 0, worst = 0;
    for (int ri = 0; ri < 3; ++ri)
        for (int s = 0; s < n_families; ++s) {
            GenSpec gs;
            gs.n = 40;
            gs.r = rows[ri].r;
            gs.mode = mode;
            gs.disk_fraction = 0.7;
            gs.seed = (uint64_t)(idx * 100000 + ri * 1000000 + s);
            gs.anchor_distance = anchor_ds[s % 4];
            const Family f = generate(gs);
            const PiercingResult res = pierce(f);
            worst = std::max(worst, (int)res.points.size());
            if ((int)res.points.size() > rows[ri].bound || !all_pierced(f, res.points))
                ++failures;
        }
    report(idx, name, failures == 0,
           "families=" + std::to_string(3 * n_families) + " failures=" +
               std::to_string(failures) + " worst=" + std::to_string(worst));
}

void criterion4() {
    int failures = 0;
    for (int s = 0; s < 200; ++s) {
        GenSpec gs;
        gs.n = 2 + s % 6;  // n <= 7
        gs.r = (s % 3 == 0) ? 0.85 : (s % 3 == 1 ? 0.7 : 0.5);
        gs.mode = (s % 2) ? Mode::Property43 : Mode::Property22;
        gs.disk_fraction = 0.6;
        gs.seed = (uint64_t)(400000 + s);
        gs.anchor_distance = 2.5 + 0.35 * (s % 5);
        const Family f = generate(gs);
        const OracleResult oracle = exact_piercing_number(f);
        const PiercingResult solver = pierce(f);
        const bool ok = oracle.tau <= (int)solver.points.size() &&
                        all_pierced(f, oracle.points) &&
                        sampling_fallback_tau(f, 0.01) == oracle.tau;
        if (!ok) ++failures;
    }
    report(4, "oracle cross-check on 200 seeded families", failures == 0,
           "failures=" + std::to_string(failures));
}

void criterion5() {
    const auto t0 = Clock::now();
    const double m = max_strip_height();
    const double secs = seconds_since(t0);
    const bool ok = std::abs(m - 1.870829) < 1e-5 && secs < 10.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "m=%.7f (%.2fs)", m, secs);
    report(5, "strip envelope equals sqrt(3.5)", ok, buf);
}

void criterion6() {
    const NestingReport rep = verify_nesting(1000000, 2024);
    report(6, "nesting property over 1e6 samples", rep.ok && !rep.violation,
           "in-region samples=" + std::to_string(rep.samples_in_region));
}

void criterion7() {
    std::mt19937_64 rng(777);
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1p-53); };
    int fail_p2 = 0, fail_helly = 0, fail_equiv = 0;

    for (int it = 0; it < 1000; ++it) {
        Family f;
        f.r = 0.5;
        const int n = 2 + (int)(rng() % 5);
        for (int i = 0; i < n; ++i) {
            const Point c{u(-3, 3), u(-3, 3)};
            f.sets.push_back({Disk{c, u(0.5, 1.0)}, c, 0.5});
        }
        const int nu = matching_number(f);
        for (int p = 2; p <= n; ++p)
            if (has_pq_property(f, p, 2).holds != (nu <= p - 1)) ++fail_p2;
    }

    for (int it = 0; it < 1000; ++it) {
        std::vector<FatSet> sets;
        const int n = 3 + (int)(rng() % 3);
        for (int i = 0; i < n; ++i) {
            const Point c{u(-1, 1), u(-1, 1)};
            sets.push_back({Disk{c, u(0.9, 1.5)}, c, 0.5});
        }
        bool triples = true;
        for (int i = 0; i < n && triples; ++i)
            for (int j = i + 1; j < n && triples; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (!triple_intersects(sets[i].shape, sets[j].shape, sets[k].shape)) {
                        triples = false;
                        break;
                    }
        if (!triples) continue;
        const auto p = common_point(sets);
        if (!p) {
            ++fail_helly;
            continue;
        }
        for (const FatSet& s : sets)
            if (!shape_contains(s.shape, *p, kCommonPointTol)) ++fail_helly;
    }

    for (int it = 0; it < 100; ++it) {
        GenSpec gs{10, 0.7, it % 2 ? Mode::Property43 : Mode::Property22, 0.6,
                   (uint64_t)(700000 + it), 3.0};
        const Family f = generate(gs);
        const double th = u(0, 6.28);
        const Transform t{std::cos(th), -std::sin(th), std::sin(th), std::cos(th),
                          u(-4, 4), u(-4, 4)};
        Family g = f;
        for (FatSet& s : g.sets) {
            s.witness_center = t.apply(s.witness_center);
            if (auto* d = std::get_if<Disk>(&s.shape))
                d->center = t.apply(d->center);
            else if (auto* c = std::get_if<ConvexPolygon>(&s.shape))
                for (Point& v : c->vertices) v = t.apply(v);
        }
        const PiercingResult rf = pierce(f), rg = pierce(g);
        if (rf.points.size() != rg.points.size()) {
            ++fail_equiv;
            continue;
        }
        for (size_t i = 0; i < rf.points.size(); ++i) {
            const Point m = t.apply(rf.points[i]);
            if (std::abs(m.x - rg.points[i].x) > 1e-6 || std::abs(m.y - rg.points[i].y) > 1e-6)
                ++fail_equiv;
        }
    }

    report(7, "invariant suites ((p,2)<->nu, Helly, equivariance)",
           fail_p2 == 0 && fail_helly == 0 && fail_equiv == 0,
           "p2=" + std::to_string(fail_p2) + " helly=" + std::to_string(fail_helly) +
               " equiv=" + std::to_string(fail_equiv));
}

void criterion8() {
    bool ok = true;
    for (const CoverClaim& claim : paper_claims()) {
        const std::string w1a = save_certificate(certify_cover(claim, 14, 0x1p-12, 1));
        const std::string w1b = save_certificate(certify_cover(claim, 14, 0x1p-12, 1));
        const std::string w4 = save_certificate(certify_cover(claim, 14, 0x1p-12, 4));
        if (w1a != w1b || w1a != w4) ok = false;
    }
    for (uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec gs{12, 0.7, seed % 2 ? Mode::Property43 : Mode::Property22, 0.5, seed, 3.0};
        const Family f = generate(gs);
        if (save_piercing(pierce(f)) != save_piercing(pierce(f))) ok = false;
        if (save_family(f) != save_family(generate(gs))) ok = false;
    }
    report(8, "byte-identical documents across runs and worker counts {1,4}", ok);
}

}  // namespace

int main() {
    criterion1();
    bound_sweep(2, "piercing bounds for pairwise-intersecting families (500 x 3 r-values)",
                Mode::Property22, 500);
    bound_sweep(3, "piercing bounds for (4,3) families with forced disjoint anchors (500 x 3)",
                Mode::Property43, 500);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%s (%d criterion(s) failed)\n", g_failed == 0 ? "ACCEPTED" : "REJECTED",
                g_failed);
    return g_failed == 0 ? 0 : 1;
}
