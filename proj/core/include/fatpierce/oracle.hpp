#pragma once

#include <string>
#include <vector>

#include "fatpierce/fatset.hpp"

namespace fatpierce {

inline constexpr size_t kOracleMaxSets = 10;

enum class CandidateKind { CircleCircle, PolygonVertex, EdgeEdge, WitnessCenter };

std::string to_string(CandidateKind k);

// Arrangement candidates: every non-empty intersection of a subfamily
// contains at least one of them (audited hypothesis, see the fallback).
struct CandidateSet {
    std::vector<Point> points;
    std::vector<CandidateKind> kinds;  // parallel to points
};

// Pairwise boundary-boundary intersections, polygon vertices and witness
// centers, deduplicated within 1e-9. Throws std::invalid_argument above
// kOracleMaxSets.
CandidateSet candidate_points(const Family& f);

struct OracleResult {
    int tau = 0;
    std::vector<Point> points;
};

// Exact minimum piercing: set cover over candidate coverage masks, solved by
// memoized branch-and-bound; the returned set is built greedily in
// lexicographic point order among optimal completions, so it is deterministic.
OracleResult exact_piercing_number(const Family& f);

// Same exact cover solve with a dense grid over the union's bounding box as
// the candidate pool; upper bound on tau, used to audit candidate
// completeness.
int sampling_fallback_tau(const Family& f, double grid_step);

std::string save_oracle(const OracleResult& r);

}  // namespace fatpierce
