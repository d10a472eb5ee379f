#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatpierce/region.hpp"

namespace fatpierce {

inline constexpr const char* kToolVersion = "fatpierce 1.0.0";
inline constexpr const char* kRoundingMode = "ulp-outward";
inline constexpr int kDefaultMaxDepth = 14;
inline const double kDefaultDeltaMin = 0x1p-12;

// A boundary contact where the cover margin is exactly zero; carries the
// algebraic identity (in Z[sqrt 2]) that subdivision alone cannot close.
struct Tangency {
    Point point;
    double d_value = 0.0;
    std::string identity;
};

struct CoverClaim {
    std::string id;
    RegionPtr region;
    std::vector<Disk> disks;
    double d_lo = 0.0, d_hi = 0.0;  // equal for fixed-d claims
    std::vector<Tangency> tangencies;
    double bbox_xlo = 0, bbox_xhi = 0, bbox_ylo = 0, bbox_yhi = 0;
};

enum class CertStatus { Confirmed, Refuted, Inconclusive };

std::string to_string(CertStatus s);

struct CellBox {
    double x_lo, x_hi, y_lo, y_hi, d_lo, d_hi;
};

struct Counterexample {
    Point point;
    double d_value = 0.0;
};

struct Certificate {
    std::string claim_id;
    CertStatus status = CertStatus::Inconclusive;
    long long cell_count = 0;
    int max_depth_reached = 0;
    long long inconclusive_cells = 0;
    std::optional<Counterexample> counterexample;
    std::vector<CellBox> tangency_cells;
    std::string rounding_mode = kRoundingMode;
    std::string tool_version = kToolVersion;
    int depth_limit = kDefaultMaxDepth;
    double delta_min = kDefaultDeltaMin;
};

std::string save_certificate(const Certificate& c);

// Adaptive quadtree subdivision of the claim's bounding box (with binary
// subdivision of the d interval at the escalation fringe). Every leaf is
// proven region-free, proven inside one cover disk, discharged at a
// registered tangency, or escalated to exact point probes.
Certificate certify_cover(const CoverClaim& claim, int max_depth = kDefaultMaxDepth,
                          double delta_min = kDefaultDeltaMin, int workers = 1);

// The five figure-level cover claims, with registered tangencies verified
// exactly during setup.
std::vector<CoverClaim> paper_claims();
std::optional<CoverClaim> paper_claim(const std::string& id);

std::vector<Certificate> certify_all_paper_claims(int max_depth = kDefaultMaxDepth,
                                                  double delta_min = kDefaultDeltaMin,
                                                  int workers = 1);

struct NestingReport {
    bool ok = true;
    long long samples_in_region = 0;
    std::optional<Counterexample> violation;
};

// Randomized check that the variable-d regions nest inside their d = sqrt(8)
// instances, which reduces the fixed-d certifications to the worst case.
NestingReport verify_nesting(long long samples, uint64_t seed = 0);

// Maximum witness-center height over both center-location domains
// (brute-force grid plus local refinement); equals sqrt(3.5).
double max_strip_height();

}  // namespace fatpierce
