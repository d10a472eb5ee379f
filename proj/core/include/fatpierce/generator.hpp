#pragma once

#include <cstdint>

#include "fatpierce/fatset.hpp"

namespace fatpierce {

struct GenSpec {
    int n = 1;
    double r = 0.85;
    Mode mode = Mode::Property22;
    double disk_fraction = 0.7;  // remainder are convex polygons
    uint64_t seed = 0;
    double anchor_distance = 3.0;  // mode 43: witness distance of the disjoint pair
};

// Deterministic per seed. Mode 22 uses a hub construction (every shape
// contains a common point with margin 0.05 r); mode 43 places two disjoint
// anchors at the requested distance and clusters everything else around a hub
// just inside the second anchor. The result is validated with verify_fatness
// and has_pq_property; throws std::runtime_error if validation still fails
// after 100 attempts.
Family generate(const GenSpec& spec);

}  // namespace fatpierce
