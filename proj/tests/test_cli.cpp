// Exercises the installed command surface end to end; takes the binary path
// as argv[1] so ctest can point at the build tree.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fatpierce/fatset.hpp"
#include "fatpierce/solver.hpp"

namespace {

int g_failures = 0;
std::string g_bin;
std::string g_dir;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::fprintf(stderr, "FAIL: %s\n", what.c_str());
    }
}

int run(const std::string& args) {
    const std::string cmd = g_bin + " " + args + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <fatpierce-binary>\n");
        return 2;
    }
    g_bin = argv[1];
    g_dir = ::getenv("TMPDIR") ? ::getenv("TMPDIR") : "/tmp";
    g_dir += "/fatpierce_cli_test";
    std::system(("rm -rf " + g_dir + " && mkdir -p " + g_dir).c_str());

    // usage errors
    expect(run("") == 2, "no subcommand exits 2");
    expect(run("pierce") == 2, "missing input exits 2");
    expect(run("certify F9") == 2, "unknown claim id exits 2");

    // generate -> pierce -> oracle round trip
    const std::string fam = g_dir + "/fam.json";
    expect(run("generate --n 6 --r 0.7 --mode 43 --seed 11 --anchor-distance 3 --out " + fam) == 0,
           "generate exits 0");
    fatpierce::Family f = fatpierce::load_family_file(fam);  // parses under the schema
    expect(f.size() == 6, "generated family has 6 sets");

    const std::string pr = g_dir + "/pierce.json";
    expect(run("pierce " + fam + " --out " + pr + " --svg " + g_dir + "/fam.svg") == 0,
           "pierce exits 0");
    const fatpierce::PiercingResult r = fatpierce::load_piercing(slurp(pr));
    expect(r.points.size() <= 5, "mode 43 r=0.7 stays within 5 points");
    expect(slurp(g_dir + "/fam.svg").find("</svg>") != std::string::npos, "family SVG rendered");

    expect(run("oracle " + fam + " --out " + g_dir + "/oracle.json") == 0, "oracle exits 0");
    expect(slurp(g_dir + "/oracle.json").find("\"tau\"") != std::string::npos,
           "oracle document has tau");

    // property check exit codes
    expect(run("check " + fam + " --p 4 --q 3") == 0, "(4,3) check passes");
    write(g_dir + "/disjoint.json", R"({"mode":"22","r":1.0,"sets":[
        {"shape":{"kind":"disk","center":[0,0],"radius":1},
         "witness":{"center":[0,0],"core_radius":1}},
        {"shape":{"kind":"disk","center":[5,0],"radius":1},
         "witness":{"center":[5,0],"core_radius":1}}]})");
    expect(run("check " + g_dir + "/disjoint.json --p 2 --q 2") == 1,
           "violated property exits 1");
    expect(run("pierce " + g_dir + "/disjoint.json") == 1, "pierce on bad family exits 1");
    write(g_dir + "/broken.json", "{nope");
    expect(run("pierce " + g_dir + "/broken.json") == 2, "malformed document exits 2");

    // single-claim certification + figure
    expect(run("certify F5 --workers 2 --out " + g_dir + " --svg " + g_dir) == 0,
           "certify F5 exits 0");
    expect(slurp(g_dir + "/F5.cert.json").find("\"Confirmed\"") != std::string::npos,
           "F5 certificate Confirmed");
    expect(slurp(g_dir + "/F5.svg").find("</svg>") != std::string::npos, "F5 figure rendered");

    // determinism of emitted documents
    expect(run("generate --n 6 --r 0.7 --mode 43 --seed 11 --anchor-distance 3 --out " + fam +
               ".again") == 0,
           "regenerate exits 0");
    expect(slurp(fam) == slurp(fam + ".again"), "same seed, identical bytes");

    expect(run("render F2 --out " + g_dir + "/F2.svg") == 0, "render claim exits 0");
    expect(run("render " + fam + " --out " + g_dir + "/fam2.svg") == 0, "render family exits 0");

    if (g_failures == 0) std::printf("test_cli: all checks passed\n");
    return g_failures == 0 ? 0 : 1;
}
