#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// binary path injected by the build
#ifndef HARMTRI_CLI_PATH
#error "HARMTRI_CLI_PATH must point at the tool binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

const double kPi = 3.14159265358979323846;

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("harmtri_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CmdResult run_cli(const std::string& args) {
    static int seq = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(++seq));
    const fs::path err = scratch_dir() / ("err" + std::to_string(seq));
    const std::string cmd = std::string(HARMTRI_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = (status == -1) ? -1 : WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("roots command reports the full spectrum") {
    auto r = run_cli("roots --b-re 6 --c-re 1 --n 2 --m 3 --format structured");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["roots"]["total"] == 11);
    const double want[] = {0.54163, 0.55589, 2.43641, 2.44415, 2.45478, 2.46209};
    const int counts[] = {1, 2, 2, 2, 2, 2};
    const auto& groups = d["spectrum"]["groups"];
    REQUIRE(groups.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(std::abs(groups[i]["modulus"].get<double>() - want[i]) <= 1e-4);
        CHECK(groups[i]["count"].get<int>() == counts[i]);
    }
    // zero b falls back to equal-modulus roots of the pure power
    auto r2 = run_cli("roots --c-re -1 --n 2 --m 1 --format structured");
    REQUIRE(r2.exit_code == 0);
    Json d2 = Json::parse(r2.out);
    CHECK(d2["roots"]["total"] == 3);
    REQUIRE(d2["spectrum"]["groups"].size() == 1);
    CHECK(d2["spectrum"]["groups"][0]["count"] == 3);
}

TEST_CASE("count command walks the radius list") {
    auto r = run_cli("count --b-re -5 --c-re 2 --n 1 --m 3 --v 0.5 --v 2 --v 6 "
                     "--format structured");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.out);
    const auto& es = d["counts"];
    REQUIRE(es.size() == 3);
    CHECK(es[0]["count"] == 0);
    CHECK(es[1]["count"] == 3);
    CHECK(es[2]["count"] == 10);
    for (const auto& e : es) CHECK(e.contains("p_star"));
}

TEST_CASE("count flags boundary radii without giving up") {
    auto r = run_cli("count --b-re -2 --c-re 1 --n 1 --m 1 --v 1 --v 3 "
                     "--format structured");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.out);
    REQUIRE(d["counts"].size() == 2);
    CHECK(d["counts"][0].contains("error"));
    CHECK(d["counts"][0].contains("suggest_below"));
    CHECK(d["counts"][1]["count"] == 3);
    // every radius on a boundary: nothing succeeded
    auto r2 = run_cli("count --b-re -2 --c-re 1 --n 1 --m 1 --v 1");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("equiv command matches the known pair and rejects mismatches") {
    auto r = run_cli("equiv --b-re 3 --c-re 2 --n 3 --m 2 "
                     "--a2-re 2 --b2-re -6 --c2-re -4 --n2 3 --m2 2 --format structured");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["equivalence"]["equivalent"] == true);
    CHECK(d["equivalence"]["branch"] == "direct");
    CHECK(std::abs(d["equivalence"]["ratio"].get<double>() - 0.5) <= 1e-12);

    // rotate the constant by 0.01: defect (n+2m) * 0.01 = 0.07
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "equiv --b-re 3 --c-re 2 --n 3 --m 2 --a2-re 2 --b2-re -6 "
                  "--c2-re %.17g --c2-im %.17g --n2 3 --m2 2 --format structured",
                  -4 * std::cos(0.01), -4 * std::sin(0.01));
    auto r2 = run_cli(buf);
    REQUIRE(r2.exit_code == 0);
    Json d2 = Json::parse(r2.out);
    CHECK(d2["equivalence"]["equivalent"] == false);
    CHECK(std::abs(d2["equivalence"]["congruence_defect"].get<double>() - 0.07) <= 1e-9);

    auto r3 = run_cli("equiv --b-re 1 --c-re 1 --n 2 --m 1 "
                      "--b2-re 1 --c2-re 1 --n2 3 --m2 1");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("locus command emits params and a well-formed table") {
    auto r = run_cli("locus --kind b --n 5 --m 3 --c-re 0.5 --v 1 --samples 64 --verify");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    bool saw_params = false, saw_verify = false, saw_header = false;
    int rows = 0;
    double theta1 = -1;
    while (std::getline(in, line)) {
        if (line.rfind("# R ", 0) == 0) saw_params = true;
        if (line.rfind("# verify 2 checked, 0 failed", 0) == 0) saw_verify = true;
        if (line == "theta,re,im") {
            saw_header = true;
            continue;
        }
        if (saw_header && !line.empty() && line[0] != '#') {
            if (rows == 1) theta1 = std::strtod(line.c_str(), nullptr);
            ++rows;
        }
    }
    CHECK(saw_params);
    CHECK(saw_verify);
    CHECK(rows == 64);
    // seventeen significant digits round-trip the angle exactly
    CHECK(theta1 == 2 * kPi / 64);

    auto r2 = run_cli("locus --kind b --n 5 --m 3 --c-re 0.5 --v 1 --samples 64 "
                      "--format structured");
    REQUIRE(r2.exit_code == 0);
    Json d = Json::parse(r2.out);
    CHECK(std::abs(d["locus"]["params"]["R"].get<double>() - 11.0 / 6) <= 1e-14);
    CHECK(std::abs(d["locus"]["params"]["r"].get<double>() - 5.0 / 6) <= 1e-14);
    CHECK(std::abs(d["locus"]["params"]["d"].get<double>() - 0.5) <= 1e-14);
    CHECK(d["locus"]["theta"].size() == 64);
}

TEST_CASE("locus command degrades to curve-only when params are undefined") {
    auto r = run_cli("locus --kind c --n 1 --m 2 --b-re 1.5 --v 0.8 --samples 32 "
                     "--format structured");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["locus"]["params"].is_null());
    CHECK(d["locus"].contains("warning"));
    CHECK(d["locus"]["re"].size() == 32);
    CHECK(!r.err.empty());

    auto r2 = run_cli("locus --kind b --n 2 --m 1 --v 1 --samples 32");
    CHECK(r2.exit_code == 2);  // fixed coefficient missing (zero)
}

TEST_CASE("singular command surveys the degeneracy landscape") {
    auto r = run_cli("singular --n 1 --m 1 --c-re -1 --format structured");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.out);
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(d["singular"]["rho"].get<double>() - 2 * s3 / 3) <= 1e-12);
    REQUIRE(d["singular"]["cusps"].size() == 1);
    CHECK(std::abs(d["singular"]["cusps"][0]["v"].get<double>() - s3 / 3) <= 1e-12);
    bool found = false;
    for (const auto& b : d["singular"]["cusps"][0]["candidates"])
        if (std::abs(b[0].get<double>() - 2 * s3 / 3) <= 1e-9 &&
            std::abs(b[1].get<double>()) <= 1e-9)
            found = true;
    CHECK(found);

    // captioned disk radii, and the flagged mismatch on the third figure
    auto r53 = run_cli("singular --n 5 --m 3 --c-re 0.5 --format structured");
    Json d53 = Json::parse(r53.out);
    CHECK(std::abs(d53["singular"]["rho"].get<double>() - 0.7676) <= 1e-3);
    CHECK(!d53["singular"]["published"].is_null());
    CHECK(!d53["singular"]["published"].contains("note"));

    auto r41 = run_cli("singular --n 4 --m 1 --c-re 1 --format structured");
    Json d41 = Json::parse(r41.out);
    CHECK(std::abs(d41["singular"]["rho"].get<double>() - 1.1925) <= 1e-3);
    REQUIRE(!d41["singular"]["published"].is_null());
    CHECK(d41["singular"]["published"].contains("note"));

    // locus double points at an explicit radius
    auto rdp = run_cli("singular --n 1 --m 1 --c-re 1 --v 0.6 --samples 512 "
                       "--format structured");
    Json ddp = Json::parse(rdp.out);
    REQUIRE(ddp["singular"]["double_points"].size() == 1);
    CHECK(ddp["singular"]["double_points"][0]["points"].size() == 2);
}

TEST_CASE("plot writes a deterministic two-pane figure") {
    const fs::path fig1 = scratch_dir() / "fig1.svg";
    const fs::path fig2 = scratch_dir() / "fig2.svg";
    const std::string args = "plot --b-re -2 --c-re 1 --n 1 --m 1 --v 2.23606797749979 "
                             "--out ";
    auto r1 = run_cli(args + fig1.string());
    auto r2 = run_cli(args + fig2.string());
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    const std::string svg = slurp(fig1);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("stroke-dasharray=\"2,4\"") != std::string::npos);   // even rays
    CHECK(svg.find("stroke-dasharray=\"8,4\"") != std::string::npos);   // odd rays
    CHECK(svg.find("<polyline") != std::string::npos);                  // locus
    CHECK(svg.find("z plane") != std::string::npos);
    CHECK(svg == slurp(fig2));

    auto r3 = run_cli("plot --b-re 1 --c-re 1 --n 1 --m 1 --v 1 --out /nonexistent/x.svg");
    CHECK(r3.exit_code == 4);
}

TEST_CASE("report carries every section and round-trips its input echo") {
    const fs::path rep1 = scratch_dir() / "rep1.json";
    const fs::path rep2 = scratch_dir() / "rep2.json";
    auto r1 = run_cli("report --b-re 6 --c-re 1 --n 2 --m 3 --format structured --out " +
                      rep1.string());
    REQUIRE(r1.exit_code == 0);
    nlohmann::ordered_json d = nlohmann::ordered_json::parse(slurp(rep1));
    const char* keys[] = {"input",  "triangle_profile", "counts",   "roots",
                          "spectrum", "uj",             "rays",     "singular",
                          "equivalence", "meta"};
    int i = 0;
    REQUIRE(d.is_object());
    for (auto it = d.begin(); it != d.end(); ++it, ++i) {
        REQUIRE(i < 10);
        CHECK(it.key() == keys[i]);
    }
    CHECK(i == 10);
    CHECK(d["uj"]["members"] == nlohmann::ordered_json::array({1, 3, 5, 7, 9}));
    CHECK(d["equivalence"].is_null());
    // b = 6 sits on the even ray at angle zero, clear of the odd family
    CHECK(d["rays"]["b"]["on_ray"] == true);
    CHECK(d["rays"]["b"]["k"] == 0);
    CHECK(d["rays"]["b"]["parity"] == "even");

    // feeding the emitted report back as the spec reproduces it byte for byte
    auto r2 = run_cli("report --spec " + rep1.string() + " --format structured --out " +
                      rep2.string());
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(rep1) == slurp(rep2));
}

TEST_CASE("spec files and tolerance files are validated") {
    const fs::path spec = write_file(
        "spec_ok.json", "{\"a\": [1,0], \"b\": [-5,0], \"c\": [2,0], \"n\": 1, \"m\": 3}");
    auto r = run_cli("count --spec " + spec.string() + " --v 0.5 --format structured");
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["counts"][0]["count"] == 0);

    auto r2 = run_cli("roots --b-re 1 --c-re 1 --n 2 --m 4");
    CHECK(r2.exit_code == 2);  // non-coprime exponents

    auto r3 = run_cli("roots --spec " + scratch_dir().string() + "/missing.json");
    CHECK(r3.exit_code == 4);

    const fs::path bad = write_file("spec_bad.json", "{\"a\": [1,0], \"n\": 1}");
    auto r4 = run_cli("roots --spec " + bad.string());
    CHECK(r4.exit_code == 2);

    const fs::path badtol = write_file("tol_bad.json", "{\"residua\": 1e-9}");
    auto r5 = run_cli("roots --b-re 1 --c-re 1 --n 1 --m 1 --tol-file " + badtol.string());
    CHECK(r5.exit_code == 2);

    const fs::path oktol = write_file("tol_ok.json", "{\"modulus_group\": 1e-6}");
    auto r6 = run_cli("roots --b-re 1 --c-re 1 --n 1 --m 1 --tol-file " + oktol.string() +
                      " --format structured");
    REQUIRE(r6.exit_code == 0);
    CHECK(Json::parse(r6.out)["meta"]["tolerances"]["modulus_group"].get<double>() ==
          1e-6);

    // mixing a spec file with inline coefficients is ambiguous
    auto r7 = run_cli("roots --spec " + spec.string() + " --b-re 1");
    CHECK(r7.exit_code == 2);
}

}  // TEST_SUITE
