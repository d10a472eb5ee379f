#include "fatpierce/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include <json.hpp>

#include "fatpierce/pq.hpp"
#include "fatpierce/solver.hpp"

namespace fatpierce {

using nlohmann::json;

namespace {

const Disk* as_disk(const Shape& s) { return std::get_if<Disk>(&s); }

const std::vector<Point>* shape_vertices(const Shape& s) {
    if (const auto* c = std::get_if<ConvexPolygon>(&s)) return &c->vertices;
    if (const auto* p = std::get_if<SimplePolygon>(&s)) return &p->vertices;
    return nullptr;
}

void add_point(CandidateSet& cs, Point p, CandidateKind kind) {
    for (const Point& q : cs.points)
        if (std::abs(q.x - p.x) <= 1e-9 && std::abs(q.y - p.y) <= 1e-9) return;
    cs.points.push_back(p);
    cs.kinds.push_back(kind);
}

void require_small(const Family& f) {
    if (f.size() > kOracleMaxSets)
        throw std::invalid_argument("oracle: family larger than " +
                                    std::to_string(kOracleMaxSets) + " sets");
}

// Minimum set cover over the distinct coverage masks, memoized on the
// uncovered-set mask. Every mask is coverable because each witness center
// pierces its own set.
struct CoverSolver {
    std::vector<uint32_t> unique_masks;
    std::vector<int> memo;

    CoverSolver(size_t n, const std::vector<uint32_t>& masks) : memo(size_t{1} << n, -1) {
        unique_masks = masks;
        std::sort(unique_masks.begin(), unique_masks.end());
        unique_masks.erase(std::unique(unique_masks.begin(), unique_masks.end()),
                           unique_masks.end());
    }

    int solve(uint32_t mask) {
        if (mask == 0) return 0;
        int& slot = memo[mask];
        if (slot >= 0) return slot;
        const int lowest = __builtin_ctz(mask);
        int best = 1 << 20;
        for (uint32_t m : unique_masks)
            if ((m >> lowest) & 1u) best = std::min(best, 1 + solve(mask & ~m));
        return slot = best;
    }
};

std::vector<uint32_t> coverage_masks(const Family& f, const std::vector<Point>& pts) {
    std::vector<uint32_t> masks(pts.size(), 0);
    for (size_t k = 0; k < pts.size(); ++k)
        for (size_t i = 0; i < f.size(); ++i)
            if (shape_contains(f.sets[i].shape, pts[k], kMembershipTol))
                masks[k] |= uint32_t{1} << i;
    return masks;
}

}  // namespace

std::string to_string(CandidateKind k) {
    switch (k) {
        case CandidateKind::CircleCircle: return "circle-circle vertex";
        case CandidateKind::PolygonVertex: return "polygon vertex";
        case CandidateKind::EdgeEdge: return "edge-edge vertex";
        default: return "witness center";
    }
}

CandidateSet candidate_points(const Family& f) {
    require_small(f);
    CandidateSet cs;
    const size_t n = f.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const Shape& a = f.sets[i].shape;
            const Shape& b = f.sets[j].shape;
            const Disk* da = as_disk(a);
            const Disk* db = as_disk(b);
            const auto* va = shape_vertices(a);
            const auto* vb = shape_vertices(b);
            if (da && db) {
                try {
                    for (Point p : circle_circle_intersections(*da, *db))
                        add_point(cs, p, CandidateKind::CircleCircle);
                } catch (const CoincidentCircles&) {
                }
            } else if (da || db) {
                const Disk& d = da ? *da : *db;
                const std::vector<Point>& vs = da ? *vb : *va;
                for (size_t e = 0; e < vs.size(); ++e)
                    for (Point p :
                         circle_segment_intersections(d, vs[e], vs[(e + 1) % vs.size()]))
                        add_point(cs, p, CandidateKind::EdgeEdge);
            } else {
                for (size_t e = 0; e < va->size(); ++e)
                    for (size_t g = 0; g < vb->size(); ++g)
                        for (Point p : segment_segment_intersections(
                                 (*va)[e], (*va)[(e + 1) % va->size()], (*vb)[g],
                                 (*vb)[(g + 1) % vb->size()]))
                            add_point(cs, p, CandidateKind::EdgeEdge);
            }
        }
    }
    for (const FatSet& s : f.sets)
        if (const auto* vs = shape_vertices(s.shape))
            for (Point p : *vs) add_point(cs, p, CandidateKind::PolygonVertex);
    for (const FatSet& s : f.sets) add_point(cs, s.witness_center, CandidateKind::WitnessCenter);
    return cs;
}

OracleResult exact_piercing_number(const Family& f) {
    require_small(f);
    if (f.size() == 0) return {};
    const CandidateSet cs = candidate_points(f);
    const std::vector<uint32_t> masks = coverage_masks(f, cs.points);

    CoverSolver solver(f.size(), masks);
    const uint32_t full = (uint32_t{1} << f.size()) - 1;
    OracleResult res;
    res.tau = solver.solve(full);

    // lexicographic greedy over candidates, constrained to optimal completions
    std::vector<size_t> order(cs.points.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const Point &p = cs.points[a], &q = cs.points[b];
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    uint32_t remaining = full;
    int need = res.tau;
    while (remaining != 0) {
        for (size_t k : order) {
            if (!(masks[k] & remaining)) continue;
            if (solver.solve(remaining & ~masks[k]) != need - 1) continue;
            res.points.push_back(cs.points[k]);
            remaining &= ~masks[k];
            --need;
            break;
        }
    }
    return res;
}

int sampling_fallback_tau(const Family& f, double grid_step) {
    require_small(f);
    if (f.size() == 0) return 0;
    if (grid_step <= 0.0) throw std::invalid_argument("oracle: grid_step must be positive");

    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const FatSet& s : f.sets) {
        if (const Disk* d = as_disk(s.shape)) {
            xlo = std::min(xlo, d->center.x - d->radius);
            xhi = std::max(xhi, d->center.x + d->radius);
            ylo = std::min(ylo, d->center.y - d->radius);
            yhi = std::max(yhi, d->center.y + d->radius);
        } else {
            for (Point p : *shape_vertices(s.shape)) {
                xlo = std::min(xlo, p.x);
                xhi = std::max(xhi, p.x);
                ylo = std::min(ylo, p.y);
                yhi = std::max(yhi, p.y);
            }
        }
    }

    std::vector<uint32_t> masks;
    const long long nx = (long long)((xhi - xlo) / grid_step) + 1;
    const long long ny = (long long)((yhi - ylo) / grid_step) + 1;
    for (long long ix = 0; ix <= nx; ++ix)
        for (long long iy = 0; iy <= ny; ++iy) {
            const Point p{xlo + ix * grid_step, ylo + iy * grid_step};
            uint32_t m = 0;
            for (size_t i = 0; i < f.size(); ++i)
                if (shape_contains(f.sets[i].shape, p, kMembershipTol)) m |= uint32_t{1} << i;
            if (m) masks.push_back(m);
        }

    uint32_t covered = 0;
    for (uint32_t m : masks) covered |= m;
    const uint32_t full = (uint32_t{1} << f.size()) - 1;
    if (covered != full)
        throw std::runtime_error("oracle: grid_step too coarse, a set has no grid point");

    CoverSolver solver(f.size(), masks);
    return solver.solve(full);
}

std::string save_oracle(const OracleResult& r) {
    json j;
    j["tau"] = r.tau;
    json pts = json::array();
    for (const Point& p : r.points) pts.push_back(json::array({p.x, p.y}));
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

}  // namespace fatpierce
