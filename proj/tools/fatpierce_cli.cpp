#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fatpierce/certifier.hpp"
#include "fatpierce/generator.hpp"
#include "fatpierce/oracle.hpp"
#include "fatpierce/pq.hpp"
#include "fatpierce/solver.hpp"
#include "fatpierce/svg.hpp"

using namespace fatpierce;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void log_tangency_discharges(const CoverClaim& claim, const Certificate& cert) {
    for (const Tangency& t : claim.tangencies) {
        long long cells = 0;
        bool seen = false;
        for (const CellBox& b : cert.tangency_cells) {
            const double dx = std::max({b.x_lo - t.point.x, 0.0, t.point.x - b.x_hi});
            const double dy = std::max({b.y_lo - t.point.y, 0.0, t.point.y - b.y_hi});
            if (std::hypot(dx, dy) <= 10.0 * cert.delta_min &&
                t.d_value >= b.d_lo - 1e-9 && t.d_value <= b.d_hi + 1e-9) {
                ++cells;
                seen = true;
            }
        }
        if (seen)
            std::cerr << claim.id << ": exact-tangency discharge at (" << t.point.x << ", "
                      << t.point.y << "), d = " << t.d_value << " [" << t.identity << "], "
                      << cells << " cell(s)\n";
    }
}

int cmd_certify(const std::string& which, int depth, double delta, int workers,
                const std::string& out_dir, const std::string& svg_dir) {
    bool any_refuted = false, any_inconclusive = false;
    for (const CoverClaim& claim : paper_claims()) {
        if (which != "all" && which != claim.id) continue;
        const Certificate cert = certify_cover(claim, depth, delta, workers);
        std::cerr << claim.id << ": " << to_string(cert.status) << " (cells=" << cert.cell_count
                  << ", max depth=" << cert.max_depth_reached << ")\n";
        log_tangency_discharges(claim, cert);
        if (cert.counterexample)
            std::cerr << claim.id << ": counterexample at (" << cert.counterexample->point.x
                      << ", " << cert.counterexample->point.y
                      << "), d = " << cert.counterexample->d_value << "\n";
        write_text(out_dir.empty() ? "" : out_dir + "/" + claim.id + ".cert.json",
                   save_certificate(cert));
        if (!svg_dir.empty())
            write_text(svg_dir + "/" + claim.id + ".svg",
                       render_claim_svg(claim, cert.counterexample));
        any_refuted |= cert.status == CertStatus::Refuted;
        any_inconclusive |= cert.status == CertStatus::Inconclusive;
    }
    if (any_refuted) return kExitFail;
    return any_inconclusive ? kExitInconclusive : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piercing-number toolkit for planar fat-set families"};
    app.require_subcommand(1);

    std::string in_path, out_path, svg_path;
    int depth = kDefaultMaxDepth, workers = 1;
    double delta = kDefaultDeltaMin;

    auto* pierce_cmd = app.add_subcommand("pierce", "pierce a family with the constructive bound");
    pierce_cmd->add_option("in", in_path, "family JSON")->required();
    pierce_cmd->add_option("--out", out_path, "piercing document path (default stdout)");
    pierce_cmd->add_option("--svg", svg_path, "render family + points to SVG");

    std::string claim_id = "all";
    auto* certify_cmd = app.add_subcommand("certify", "certify the five cover claims");
    certify_cmd->add_option("claim", claim_id, "claim id (F1..F5) or 'all'");
    certify_cmd->add_option("--depth", depth, "max subdivision depth");
    certify_cmd->add_option("--delta", delta, "minimum cell side");
    certify_cmd->add_option("--workers", workers, "worker threads");
    certify_cmd->add_option("--out", out_path, "directory for certificate documents");
    certify_cmd->add_option("--svg", svg_path, "directory for claim figures");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact piercing number (small families)");
    oracle_cmd->add_option("in", in_path, "family JSON")->required();
    oracle_cmd->add_option("--out", out_path, "oracle document path (default stdout)");

    GenSpec gs;
    std::string mode_str = "22";
    auto* gen_cmd = app.add_subcommand("generate", "random family with a guaranteed property");
    gen_cmd->add_option("--n", gs.n, "number of sets");
    gen_cmd->add_option("--r", gs.r, "fatness floor");
    gen_cmd->add_option("--mode", mode_str, "22 or 43")->check(CLI::IsMember({"22", "43"}));
    gen_cmd->add_option("--disk-fraction", gs.disk_fraction, "share of disk shapes");
    gen_cmd->add_option("--seed", gs.seed, "RNG seed");
    gen_cmd->add_option("--anchor-distance", gs.anchor_distance, "mode 43 anchor separation");
    gen_cmd->add_option("--out", out_path, "family document path (default stdout)");

    int p = 2, q = 2;
    auto* check_cmd = app.add_subcommand("check", "verify the (p,q) property");
    check_cmd->add_option("in", in_path, "family JSON")->required();
    check_cmd->add_option("--p", p, "p");
    check_cmd->add_option("--q", q, "q");

    auto* render_cmd = app.add_subcommand("render", "render a family or claim to SVG");
    render_cmd->add_option("in", in_path, "family JSON or claim id (F1..F5)")->required();
    render_cmd->add_option("--out", out_path, "SVG path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pierce_cmd->parsed()) {
            const Family f = load_family_file(in_path);
            const PiercingResult r = pierce(f);
            write_text(out_path, save_piercing(r));
            if (!svg_path.empty()) write_text(svg_path, render_family_svg(f, r.points));
            return kExitOk;
        }
        if (certify_cmd->parsed()) {
            if (claim_id != "all" && !paper_claim(claim_id)) {
                std::cerr << "unknown claim id: " << claim_id << "\n";
                return kExitUsage;
            }
            return cmd_certify(claim_id, depth, delta, workers, out_path, svg_path);
        }
        if (oracle_cmd->parsed()) {
            write_text(out_path, save_oracle(exact_piercing_number(load_family_file(in_path))));
            return kExitOk;
        }
        if (gen_cmd->parsed()) {
            gs.mode = mode_str == "22" ? Mode::Property22 : Mode::Property43;
            write_text(out_path, save_family(generate(gs)));
            return kExitOk;
        }
        if (check_cmd->parsed()) {
            const PQReport rep = has_pq_property(load_family_file(in_path), p, q);
            if (rep.holds) {
                std::cerr << "(" << p << "," << q << ") property holds\n";
                return kExitOk;
            }
            std::cerr << "(" << p << "," << q << ") property violated by sets:";
            for (int i : *rep.witness) std::cerr << ' ' << i;
            std::cerr << "\n";
            return kExitFail;
        }
        if (render_cmd->parsed()) {
            if (const auto claim = paper_claim(in_path)) {
                write_text(out_path, render_claim_svg(*claim));
            } else {
                write_text(out_path, render_family_svg(load_family_file(in_path)));
            }
            return kExitOk;
        }
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return kExitFail;
    } catch (const ConstructionFailure& e) {
        std::cerr << "construction failure: " << e.what() << "\n";
        return kExitFail;
    } catch (const FamilyFormatError& e) {
        std::cerr << "bad family document: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
