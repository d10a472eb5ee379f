#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatpierce/fatset.hpp"
#include "fatpierce/pq.hpp"

namespace fatpierce {

inline const double kSqrt8 = std::sqrt(8.0);
inline const double kRadiusLarge = kSqrt8 - 2.0;  // disk radius in the r >= sqrt(8)-2 cases
inline constexpr double kRadiusMid = 0.68;        // disk radius in the 0.68 <= r cases
inline const double kStripMax = std::sqrt(3.5);   // max center height

// Coordinates with the diameter pair on the x axis: c_B at (sqrt(8), 0) and
// c_A at (sqrt(8)-d, 0).
struct NormalizedFrame {
    Transform to_frame;
    int a_index = 0;
    int b_index = 0;
    double d = 0.0;
    bool reflected = false;

    Point frame_point(Point p) const { return to_frame.apply(p); }
    Point original_point(Point p) const { return to_frame.inverse().apply(p); }
    void reflect();
};

struct Decomposition43 {
    std::vector<int> f_b;   // meets B, misses A
    std::vector<int> f_ab;  // meets both
    int a_index = 0;
    int b_index = 0;
};

enum class CaseId { C311, C312, C313, C321, C322, GRID22, GRID43, SMALL, EMPTY_FAB };

std::string to_string(CaseId id);
CaseId case_id_from_string(const std::string& s);

struct PiercingResult {
    std::vector<Point> points;  // original coordinates
    int bound_used = 0;
    CaseId case_id = CaseId::SMALL;
    std::vector<int> per_set_hit;
};

std::string save_piercing(const PiercingResult& r);
PiercingResult load_piercing(const std::string& json_text);

// Fixed cover centers, in frame coordinates.
struct CaseTable {
    static std::array<Point, 4> c311();
    static std::array<Point, 4> c312();
    static std::array<Point, 2> c313();
    static std::array<Point, 5> c321();
    static std::array<Point, 3> c322();
};

struct PropertyViolation : std::runtime_error {
    std::vector<int> indices;
    PropertyViolation(const std::string& msg, std::vector<int> idx = {})
        : std::runtime_error(msg), indices(std::move(idx)) {}
};

struct ConstructionFailure : std::runtime_error {
    int set_index;
    ConstructionFailure(const std::string& msg, int index)
        : std::runtime_error(msg), set_index(index) {}
};

// Exhaustive diameter pair, lexicographic tie-break, reflection off.
NormalizedFrame select_diameter_pair(const Family& f);

// Requires A, B disjoint and mode property43. May swap the roles of A and B
// (rebuilding the frame) so that B meets every other set.
Decomposition43 decompose_43(const Family& f, NormalizedFrame& frame);

// Vertical strip normalization of Lemmas 2.6/2.7-style shifts:
// returns the strip top a in [1, sqrt(3.5)] and whether to reflect first.
std::pair<double, bool> strip_shift(double m_plus, double m_minus);

// k^2 grid-square centers covering [sqrt(8)-2, sqrt(8)] x [-1, 1],
// k = ceil(sqrt(2)/r); each square fits in a disk of radius r.
std::vector<Point> grid_cover(double r);

PiercingResult pierce(const Family& f);

inline constexpr double kMembershipTol = 1e-9;

}  // namespace fatpierce
