#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fatpierce/certifier.hpp"
#include "fatpierce/svg.hpp"

using namespace fatpierce;

namespace {

CoverClaim margined_disk_claim() {
    // B(0,1) inside B(0,1.01): Confirmed with a genuine margin everywhere
    CoverClaim c;
    c.id = "unit-in-slightly-larger";
    c.region = region_disk(Coef::constant(0), Coef::constant(0), Coef::constant(1.0));
    c.disks = {{{0, 0}, 1.01}};
    c.bbox_xlo = -1.1;
    c.bbox_xhi = 1.1;
    c.bbox_ylo = -1.1;
    c.bbox_yhi = 1.1;
    return c;
}

}  // namespace

TEST_CASE("confirm a margined cover") {
    const Certificate cert = certify_cover(margined_disk_claim(), 10, 0x1p-10);
    CHECK(cert.status == CertStatus::Confirmed);
    CHECK(cert.inconclusive_cells == 0);
    CHECK_FALSE(cert.counterexample.has_value());
    CHECK(cert.cell_count > 0);
}

TEST_CASE("refute an undersized cover with a genuine counterexample") {
    CoverClaim c = margined_disk_claim();
    c.id = "unit-in-smaller";
    c.disks = {{{0, 0}, 0.9}};
    const Certificate cert = certify_cover(c, 10, 0x1p-10, /*workers=*/1);
    REQUIRE(cert.status == CertStatus::Refuted);
    REQUIRE(cert.counterexample.has_value());
    const Point p = cert.counterexample->point;
    CHECK(std::hypot(p.x, p.y) <= 1.0);   // in the region
    CHECK(std::hypot(p.x, p.y) > 0.9);    // outside the cover
}

TEST_CASE("refute a shifted cover") {
    CoverClaim c = margined_disk_claim();
    c.id = "shifted";
    c.disks = {{{0.4, 0}, 1.0}};
    const Certificate cert = certify_cover(c, 10, 0x1p-10, 1);
    REQUIRE(cert.status == CertStatus::Refuted);
    CHECK(cert.counterexample->point.x < 0.0);  // the uncovered crescent is on the left
}

TEST_CASE("union and intersection regions classify soundly") {
    // annulus-like: big disk minus nothing, intersected with a strip
    const RegionPtr reg = region_intersect(
        {region_disk(Coef::constant(0), Coef::constant(0), Coef::constant(2.0)),
         region_hstrip(0.5, -0.5)});
    CoverClaim c;
    c.id = "strip-lens";
    c.region = reg;
    c.disks = {{{-1, 0}, 1.2}, {{1, 0}, 1.2}};
    c.bbox_xlo = -2.1;
    c.bbox_xhi = 2.1;
    c.bbox_ylo = -0.6;
    c.bbox_yhi = 0.6;
    const Certificate cert = certify_cover(c, 12, 0x1p-10);
    CHECK(cert.status == CertStatus::Confirmed);
}

TEST_CASE("paper claims are well formed") {
    const auto claims = paper_claims();
    REQUIRE(claims.size() == 5);
    const char* ids[] = {"F1", "F2", "F3", "F4", "F5"};
    for (int i = 0; i < 5; ++i) {
        CHECK(claims[i].id == ids[i]);
        CHECK_FALSE(claims[i].disks.empty());
        CHECK(claims[i].bbox_xlo < claims[i].bbox_xhi);
        CHECK(claims[i].d_lo <= claims[i].d_hi);
    }
    CHECK(paper_claim("F3").has_value());
    CHECK_FALSE(paper_claim("F9").has_value());
    // F3 carries the d = 4 contact that subdivision alone cannot close
    bool has_d4 = false;
    for (const Tangency& t : paper_claim("F3")->tangencies)
        if (t.d_value == 4.0) has_d4 = true;
    CHECK(has_d4);
}

TEST_CASE("all five paper claims confirm and are worker-invariant") {
    const auto one = certify_all_paper_claims(kDefaultMaxDepth, kDefaultDeltaMin, 1);
    const auto four = certify_all_paper_claims(kDefaultMaxDepth, kDefaultDeltaMin, 4);
    REQUIRE(one.size() == 5);
    REQUIRE(four.size() == 5);
    for (size_t i = 0; i < 5; ++i) {
        CHECK(one[i].status == CertStatus::Confirmed);
        CHECK(save_certificate(one[i]) == save_certificate(four[i]));
    }
    // F3's tangency cells include the d = 4 discharge
    bool d4_cell = false;
    for (const CellBox& b : one[2].tangency_cells)
        if (b.d_hi >= 4.0 - 1e-9) d4_cell = true;
    CHECK(d4_cell);
}

TEST_CASE("certificate document shape") {
    const Certificate cert = certify_cover(margined_disk_claim(), 8, 0x1p-8);
    const std::string doc = save_certificate(cert);
    CHECK(doc.find("\"claim\"") != std::string::npos);
    CHECK(doc.find("\"Confirmed\"") != std::string::npos);
    CHECK(doc.find(kRoundingMode) != std::string::npos);
    CHECK(doc.find(kToolVersion) != std::string::npos);
}

TEST_CASE("max strip height equals sqrt(3.5)") {
    CHECK(std::abs(max_strip_height() - std::sqrt(3.5)) < 1e-5);
}

TEST_CASE("nesting spot check") {
    const NestingReport rep = verify_nesting(20000, 3);
    CHECK(rep.ok);
    CHECK_FALSE(rep.violation.has_value());
    CHECK(rep.samples_in_region > 0);
}

TEST_CASE("claim figures are emitted for every claim") {
    for (const CoverClaim& c : paper_claims()) {
        const std::string svg = render_claim_svg(c);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(svg.find(c.id) != std::string::npos);
        CHECK(svg.find("<circle") != std::string::npos);
    }
    // counterexample marker shows up
    CoverClaim c = margined_disk_claim();
    const std::string svg = render_claim_svg(c, Counterexample{{0.5, 0.5}, 0.0});
    CHECK(svg.find("<line") != std::string::npos);
}
