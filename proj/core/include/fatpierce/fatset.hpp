#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fatpierce/geometry.hpp"

namespace fatpierce {

using Shape = std::variant<Disk, ConvexPolygon, SimplePolygon>;

// Tolerance on both fatness containments.
inline constexpr double kFatnessTol = 1e-9;

// An r-fat set: B(witness_center, core_radius) <= shape <= B(witness_center, 1).
struct FatSet {
    Shape shape;
    Point witness_center;
    double core_radius = 0.0;
};

enum class Mode { Property22, Property43 };

struct Family {
    std::vector<FatSet> sets;
    double r = 1.0;  // common fatness floor
    Mode mode = Mode::Property22;

    size_t size() const { return sets.size(); }
};

bool shape_is_convex(const Shape& s);
bool shape_contains(const Shape& s, Point p, double tol = 0.0);
double shape_distance(const Shape& s, Point p);  // 0 when inside

bool verify_fatness(const Shape& s, Point c, double r);

// Grid + coordinate-descent witness search. Empty result is not a proof of
// non-fatness.
std::optional<std::pair<Point, double>> certify_fatness(const Shape& s, double r_target);

struct FamilyFormatError : std::runtime_error {
    int set_index;  // -1 when not tied to a specific set
    FamilyFormatError(const std::string& msg, int index = -1)
        : std::runtime_error(msg), set_index(index) {}
};

Family load_family(const std::string& json_text);
std::string save_family(const Family& f);
Family load_family_file(const std::string& path);
void save_family_file(const Family& f, const std::string& path);

}  // namespace fatpierce
