#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fatpierce/fatset.hpp"

namespace fatpierce {

struct PQReport {
    bool holds = true;
    // A p-subset with no q-wise intersecting sub-q-tuple, present iff !holds.
    std::optional<std::vector<int>> witness;
};

bool shapes_intersect(const Shape& a, const Shape& b);
bool intersects(const FatSet& a, const FatSet& b);

// Common-point test for three closed convex shapes via boundary candidates:
// every minimal intersection either has a boundary-boundary corner or
// swallows a whole shape (whose center/vertices are candidates).
bool triple_intersects(const Shape& a, const Shape& b, const Shape& c);

inline constexpr double kCommonPointTol = 1e-9;

// Point in every set when the common intersection is non-empty, by minimizing
// the max signed violation (subgradient descent + pattern-search polish).
// Throws std::invalid_argument for non-convex shapes.
std::optional<Point> common_point(std::span<const FatSet> sets);

// Exhaustive (p,q) check. q >= 3 requires convex shapes (Helly reduces q-wise
// to triple-wise). Witness is the lexicographically first failing p-subset.
PQReport has_pq_property(const Family& f, int p, int q);

// Maximum number of pairwise disjoint sets; exhaustive, |f| <= 20.
int matching_number(const Family& f);

}  // namespace fatpierce
