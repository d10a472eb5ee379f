#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatpierce/certifier.hpp"
#include "fatpierce/fatset.hpp"

namespace fatpierce {

// Figure for one cover claim: region primitive boundaries (dashed), cover
// disks (filled), registered tangencies and an optional counterexample.
// Fixed viewBox from the claim bounding box with 10% padding.
std::string render_claim_svg(const CoverClaim& claim,
                             const std::optional<Counterexample>& cex = std::nullopt);

// Family plot: shapes, witness centers, optional piercing points.
std::string render_family_svg(const Family& f, const std::vector<Point>& pierce = {});

}  // namespace fatpierce
