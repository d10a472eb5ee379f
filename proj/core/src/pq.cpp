#include "fatpierce/pq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fatpierce {

namespace {

const std::vector<Point>& poly_vertices(const Shape& s) {
    if (const auto* c = std::get_if<ConvexPolygon>(&s)) return c->vertices;
    return std::get<SimplePolygon>(s).vertices;
}

bool is_poly(const Shape& s) { return !std::holds_alternative<Disk>(s); }

}  // namespace

bool shapes_intersect(const Shape& a, const Shape& b) {
    const auto* da = std::get_if<Disk>(&a);
    const auto* db = std::get_if<Disk>(&b);
    if (da && db) return dist(da->center, db->center) <= da->radius + db->radius;
    if (da) return shape_distance(b, da->center) <= da->radius;
    if (db) return shape_distance(a, db->center) <= db->radius;
    const auto& va = poly_vertices(a);
    const auto& vb = poly_vertices(b);
    for (const Point& v : va)
        if (shape_contains(b, v)) return true;
    for (const Point& v : vb)
        if (shape_contains(a, v)) return true;
    for (size_t i = 0; i < va.size(); ++i)
        for (size_t j = 0; j < vb.size(); ++j)
            if (!segment_segment_intersections(va[i], va[(i + 1) % va.size()], vb[j],
                                               vb[(j + 1) % vb.size()])
                     .empty())
                return true;
    return false;
}

bool intersects(const FatSet& a, const FatSet& b) { return shapes_intersect(a.shape, b.shape); }

namespace {

void boundary_pair_candidates(const Shape& a, const Shape& b, std::vector<Point>& out) {
    const auto* da = std::get_if<Disk>(&a);
    const auto* db = std::get_if<Disk>(&b);
    if (da && db) {
        try {
            for (const Point& p : circle_circle_intersections(*da, *db)) out.push_back(p);
        } catch (const CoincidentCircles&) {
            out.push_back({da->center.x + da->radius, da->center.y});
        }
        return;
    }
    if (da || db) {
        const Disk& d = da ? *da : *db;
        const auto& vs = poly_vertices(da ? b : a);
        for (size_t i = 0; i < vs.size(); ++i)
            for (const Point& p : circle_segment_intersections(d, vs[i], vs[(i + 1) % vs.size()]))
                out.push_back(p);
        return;
    }
    const auto& va = poly_vertices(a);
    const auto& vb = poly_vertices(b);
    for (size_t i = 0; i < va.size(); ++i)
        for (size_t j = 0; j < vb.size(); ++j)
            for (const Point& p : segment_segment_intersections(
                     va[i], va[(i + 1) % va.size()], vb[j], vb[(j + 1) % vb.size()]))
                out.push_back(p);
}

void self_candidates(const Shape& s, std::vector<Point>& out) {
    if (const auto* d = std::get_if<Disk>(&s)) {
        out.push_back(d->center);
        return;
    }
    for (const Point& v : poly_vertices(s)) out.push_back(v);
}

}  // namespace

bool triple_intersects(const Shape& a, const Shape& b, const Shape& c) {
    if (!shapes_intersect(a, b) || !shapes_intersect(a, c) || !shapes_intersect(b, c))
        return false;
    std::vector<Point> cand;
    cand.reserve(16);
    boundary_pair_candidates(a, b, cand);
    boundary_pair_candidates(a, c, cand);
    boundary_pair_candidates(b, c, cand);
    self_candidates(a, cand);
    self_candidates(b, cand);
    self_candidates(c, cand);
    const double tol = 1e-9;
    for (const Point& p : cand)
        if (shape_contains(a, p, tol) && shape_contains(b, p, tol) && shape_contains(c, p, tol))
            return true;
    return false;
}

namespace {

// Signed violation of one convex set; <= 0 inside.
double violation(const FatSet& s, Point x, Point* grad) {
    if (const auto* d = std::get_if<Disk>(&s.shape)) {
        const double r = dist(x, d->center);
        if (grad) {
            if (r > 1e-15)
                *grad = {(x.x - d->center.x) / r, (x.y - d->center.y) / r};
            else
                *grad = {1.0, 0.0};
        }
        return r - d->radius;
    }
    const auto& poly = std::get<ConvexPolygon>(s.shape);
    const auto& vs = poly.vertices;
    double best = -1e300;
    Point n{1, 0};
    for (size_t i = 0; i < vs.size(); ++i) {
        const Point p0 = vs[i], p1 = vs[(i + 1) % vs.size()];
        const double len = dist(p0, p1);
        if (len == 0.0) continue;
        const double sd = -cross(p0, p1, x) / len;
        if (sd > best) {
            best = sd;
            n = {(p1.y - p0.y) / len, -(p1.x - p0.x) / len};
        }
    }
    if (grad) *grad = n;
    return best;
}

}  // namespace

std::optional<Point> common_point(std::span<const FatSet> sets) {
    if (sets.empty()) return std::nullopt;
    for (const FatSet& s : sets)
        if (!shape_is_convex(s.shape)) throw std::invalid_argument("convexity required");

    auto phi = [&](Point x, Point* grad) {
        double worst = -1e300;
        Point g{1, 0};
        for (const FatSet& s : sets) {
            Point gi;
            const double v = violation(s, x, &gi);
            if (v > worst) {
                worst = v;
                g = gi;
            }
        }
        if (grad) *grad = g;
        return worst;
    };

    Point x{0, 0};
    double spread = 0.0;
    for (const FatSet& s : sets) {
        x.x += s.witness_center.x / sets.size();
        x.y += s.witness_center.y / sets.size();
    }
    for (const FatSet& s : sets) spread = std::max(spread, dist(x, s.witness_center));
    spread = std::max(spread, 0.5);

    // Run to full convergence rather than stopping at first feasibility, so
    // the returned point is the minimizer and rigid motions of the input move
    // the output rigidly.
    Point best = x;
    double best_phi = phi(x, nullptr);
    for (int k = 0; k < 600; ++k) {
        Point g;
        const double v = phi(x, &g);
        if (v < best_phi) {
            best_phi = v;
            best = x;
        }
        const double step = spread / std::sqrt(k + 1.0);
        x = {x.x - step * g.x, x.y - step * g.y};
    }
    double h = 0.25 * spread;
    while (h > 1e-13) {
        bool improved = false;
        for (const Point d : {Point{h, 0}, Point{-h, 0}, Point{0, h}, Point{0, -h}, Point{h, h},
                              Point{h, -h}, Point{-h, h}, Point{-h, -h}}) {
            const Point c = best + d;
            const double v = phi(c, nullptr);
            if (v < best_phi) {
                best_phi = v;
                best = c;
                improved = true;
            }
        }
        if (!improved) h *= 0.5;
    }
    if (best_phi > kCommonPointTol) return std::nullopt;
    return best;
}

PQReport has_pq_property(const Family& f, int p, int q) {
    if (q < 2 || q > p) throw std::invalid_argument("require 2 <= q <= p");
    const int n = static_cast<int>(f.size());
    if (q >= 3)
        for (const FatSet& s : f.sets)
            if (!shape_is_convex(s.shape))
                throw std::invalid_argument("q >= 3 requires convex shapes");
    PQReport report;
    if (n < p) return report;  // vacuous

    std::vector<std::vector<char>> pair(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        pair[i][i] = 1;
        for (int j = i + 1; j < n; ++j)
            pair[i][j] = pair[j][i] = intersects(f.sets[i], f.sets[j]) ? 1 : 0;
    }
    // Triple table, only where pairs allow (Helly reduces q-wise to 3-wise).
    std::vector<char> triple;
    auto tidx = [n](int i, int j, int k) { return (i * n + j) * n + k; };
    if (q >= 3) {
        triple.assign(static_cast<size_t>(n) * n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    char t = 0;
                    if (pair[i][j] && pair[i][k] && pair[j][k])
                        t = triple_intersects(f.sets[i].shape, f.sets[j].shape, f.sets[k].shape)
                                ? 1
                                : 0;
                    triple[tidx(i, j, k)] = t;
                }
    }
    auto q_subset_intersects = [&](const std::vector<int>& sub) {
        if (static_cast<int>(sub.size()) == 2) return pair[sub[0]][sub[1]] != 0;
        for (size_t i = 0; i < sub.size(); ++i)
            for (size_t j = i + 1; j < sub.size(); ++j) {
                if (!pair[sub[i]][sub[j]]) return false;
                for (size_t k = j + 1; k < sub.size(); ++k)
                    if (!triple[tidx(sub[i], sub[j], sub[k])]) return false;
            }
        return true;
    };

    std::vector<int> psub(p);
    for (int i = 0; i < p; ++i) psub[i] = i;
    std::vector<int> qsub(q);
    while (true) {
        bool ok = false;
        std::vector<int> qi(q);
        for (int i = 0; i < q; ++i) qi[i] = i;
        while (!ok) {
            for (int i = 0; i < q; ++i) qsub[i] = psub[qi[i]];
            ok = q_subset_intersects(qsub);
            if (ok) break;
            int i = q - 1;
            while (i >= 0 && qi[i] == p - q + i) --i;
            if (i < 0) break;
            ++qi[i];
            for (int j = i + 1; j < q; ++j) qi[j] = qi[j - 1] + 1;
        }
        if (!ok) {
            report.holds = false;
            report.witness = psub;
            return report;
        }
        int i = p - 1;
        while (i >= 0 && psub[i] == n - p + i) --i;
        if (i < 0) break;
        ++psub[i];
        for (int j = i + 1; j < p; ++j) psub[j] = psub[j - 1] + 1;
    }
    return report;
}

namespace {

int mis_recurse(const std::vector<uint32_t>& conflict, uint32_t allowed, int start, int n) {
    int best = 0;
    for (int i = start; i < n; ++i) {
        if (!(allowed & (1u << i))) continue;
        if (best >= n - i) break;  // cannot improve
        best = std::max(best, 1 + mis_recurse(conflict, allowed & ~conflict[i] & ~(1u << i),
                                              i + 1, n));
    }
    return best;
}

}  // namespace

int matching_number(const Family& f) {
    const int n = static_cast<int>(f.size());
    if (n > 20) throw std::invalid_argument("matching_number limited to 20 sets");
    std::vector<uint32_t> conflict(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && intersects(f.sets[i], f.sets[j])) conflict[i] |= 1u << j;
    return mis_recurse(conflict, (n == 32 ? ~0u : (1u << n) - 1u), 0, n);
}

}  // namespace fatpierce
