#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixres/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = mixres::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kFamily = "(z1^4 + z2^3)*conj(z1^2 + z2^3)";

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes separate precondition failures from syntax errors") {
    auto not_convenient = run_cli({"analyze", "z1*zb2"});
    CHECK(not_convenient.code == 1);
    CHECK(not_convenient.out.empty());
    CHECK(contains(not_convenient.err, "error [convenient germ]:"));
    CHECK(contains(not_convenient.err, "convenient"));

    auto syntax = run_cli({"analyze", "z1 +"});
    CHECK(syntax.code == 2);
    CHECK(contains(syntax.err, "error [expression grammar]:"));
    CHECK(contains(syntax.err, "syntax error"));

    auto no_subcommand = run_cli({});
    CHECK(no_subcommand.code == 2);

    auto unknown = run_cli({"frobnicate", "z1"});
    CHECK(unknown.code == 2);

    auto bad_lab_mode = run_cli({"lab", "spectrum", "--r", "1", "--s", "2"});
    CHECK(bad_lab_mode.code == 2);

    auto ok = run_cli({"analyze", "z1^2 + z2^2"});
    CHECK(ok.code == 0);
    CHECK(ok.err.empty());
}

TEST_CASE("analyze text report lists support, face table, and subdivision") {
    auto r = run_cli({"analyze", kFamily});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "convenient: yes"));
    CHECK(contains(r.out, "newton boundary vertices: (6,0) (2,3) (0,6)"));
    CHECK(contains(r.out, "dual diagram rays: (1,0) (3,2) (3,4) (0,1)"));
    CHECK(contains(r.out, "face type: strongly-polar-nonnegative"));
    CHECK(contains(r.out,
                   "canonical subdivision rays: (1,0) (2,1) (3,2) (1,1) (3,4) (2,3) (1,2) (0,1)"));
    // Sweep order interleaves sector and edge weights.
    auto p21 = r.out.find("(2,1)");
    auto p32 = r.out.find("(3,2)", p21 + 1);
    auto p11 = r.out.find("(1,1)", p32 + 1);
    CHECK(p21 != std::string::npos);
    CHECK(p32 != std::string::npos);
    CHECK(p11 != std::string::npos);
}

TEST_CASE("certify --json emits the documented schema") {
    auto r = run_cli({"certify", kFamily, "--json", "--seed", "7"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);

    CHECK(doc["schema"] == "mixres/1");
    CHECK(doc["input"]["n"] == 2);
    CHECK(doc["input"]["seed"] == 7);
    CHECK(doc["input"]["samples"] == 256);
    CHECK(doc["convenience"]["convenient"] == true);

    // Face table row for the sector weight (1,1): radial degree 5, polar degree 1.
    bool found_11 = false;
    for (const auto& row : doc["face_table"]) {
        if (row["weight"] == json::array({1, 1})) {
            found_11 = true;
            CHECK(row["rdeg"] == 5);
            CHECK(row["pdeg"] == 1);
            CHECK(row["polar_sign"] == "positive");
        }
    }
    CHECK(found_11);
    CHECK(doc["face_table"].size() == 6);

    CHECK(doc["subdivision"]["vertices"].size() == 8);
    CHECK(doc["subdivision"]["cones"].size() == 7);
    for (const auto& cone : doc["subdivision"]["cones"]) CHECK(cone["det"] == 1);

    const auto& cert = doc["certificate"];
    CHECK(cert["per_cone"].size() == 11);
    CHECK(cert["L_conservative"] == json::array({6, 6}));
    CHECK(cert["L_optimistic"] == json::array({6, 6}));
    CHECK(cert["smoothness_class"] == "C^5");
    CHECK(cert["assumption_star"] == "HOLDS");

    int nonempty = 0;
    for (const auto& pc : cert["per_cone"]) {
        if (pc["status"] == "NONEMPTY") {
            ++nonempty;
            REQUIRE(pc["probe"]["witness"].is_array());
            REQUIRE(pc["probe"]["witness"].size() == 1);
            CHECK(pc["probe"]["witness"][0].size() == 2);  // [re, im]
        } else {
            CHECK(pc["probe"]["witness"].is_null());
        }
    }
    CHECK(nonempty == 2);
}

TEST_CASE("certify --json output is byte-identical across runs") {
    auto a = run_cli({"certify", kFamily, "--json", "--seed", "7"});
    auto b = run_cli({"certify", kFamily, "--json", "--seed", "7"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    CHECK(a.out.back() == '\n');
}

TEST_CASE("analyze --json parses and matches the text-mode facts") {
    auto r = run_cli({"analyze", kFamily, "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == "mixres/1");
    CHECK(doc["polynomial"]["terms"].size() == 4);
    CHECK(doc["newton_boundary"]["vertices"].size() == 3);
    CHECK(doc["dual_diagram"]["rays"].size() == 4);
    CHECK(doc["face_type"]["type"] == "strongly-polar-nonnegative");
    CHECK(doc["face_type"]["offending_weight"].is_null());

    auto again = run_cli({"analyze", kFamily, "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("pullback prints the factored form for a named cone") {
    auto r = run_cli({"pullback", kFamily, "--cone", "2,3;1,2", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "chart: z1 = u1^2*u2^3, z2 = u1*u2^2"));
    CHECK(contains(r.out, "factored: u1^3*ub1^3*u2^6*ub2^6 * (f_delta + residual)"));
    CHECK(contains(r.out, "f_delta = 1"));
    CHECK(contains(r.out, "lambda = 1"));
    CHECK(contains(r.out, "lambda = 5"));
    CHECK(contains(r.out, "lambda = 6"));
    CHECK(contains(r.out, "lambda(tau) = 1"));

    // Default k counts the strict vertices of the cone; for this interior
    // cone both generators are strict, so the result is identical.
    auto dflt = run_cli({"pullback", kFamily, "--cone", "2,3;1,2"});
    REQUIRE(dflt.code == 0);
    CHECK(dflt.out == r.out);
}

TEST_CASE("pullback rejects a cone whose first vertex sits on the boundary") {
    auto r = run_cli({"pullback", "z1*zb1^2 + z2^3*zb2", "--cone", "1,0;0,1"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "error [strictly positive vertex]:"));
}

TEST_CASE("nondeg sweeps the dual diagram classes") {
    auto r = run_cli({"nondeg", kFamily, "--samples", "32", "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "weight (2,1):"));
    CHECK(contains(r.out, "weight (3,2):"));
    CHECK(contains(r.out, "weight (1,1):"));
    CHECK(contains(r.out, "weight (3,4):"));
    CHECK(contains(r.out, "weight (3,5):"));
    CHECK(contains(r.out, "STRONGLY_ND_EXACT"));
    CHECK(contains(r.out, "NO_VIOLATION_FOUND"));
    CHECK(contains(r.out, "no violation found on any weight class"));

    auto one = run_cli({"nondeg", kFamily, "--weight", "3,2", "--samples", "32", "--seed", "5"});
    REQUIRE(one.code == 0);
    CHECK(contains(one.out, "weight (3,2):"));
    CHECK(!contains(one.out, "weight (2,1):"));
}

TEST_CASE("nondeg reports a violation for a degenerate germ") {
    auto r = run_cli({"nondeg", "(z1 - z2)^2", "--samples", "64", "--seed", "2"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "VIOLATION"));
    CHECK(!contains(r.out, "no violation found on any weight class"));
}

TEST_CASE("lab fraction reports derivative orders and the class estimate") {
    auto r = run_cli({"lab", "fraction", "--r", "1", "--s", "3"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "xi(u) = u^4 / ubar^1"));
    CHECK(contains(r.out, "|xi(u)| = |u|^3"));
    CHECK(contains(r.out, "d_u^1 d_ub^0 xi = 4 * u^3 * ubar^-1"));
    CHECK(contains(r.out, "numeric class estimate at 0: C^2"));
    CHECK(contains(r.out, "expected: C^2"));
}

TEST_CASE("plot writes a deterministic standalone svg") {
    const std::string path = "/tmp/mixres_cli_test_plot.svg";
    std::remove(path.c_str());
    auto r = run_cli({"plot", kFamily, "--out", path});
    REQUIRE(r.code == 0);

    std::string svg = slurp(path);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(contains(svg, "id=\"staircase\""));
    CHECK(contains(svg, "id=\"fan\""));
    CHECK(count_of(svg, "<circle") == 4);
    CHECK(contains(svg, ">(2,3)<"));
    CHECK(contains(svg, ">(6,0)<"));
    CHECK(contains(svg, ">(3,4)<"));

    auto again = run_cli({"plot", kFamily, "--out", path});
    REQUIRE(again.code == 0);
    CHECK(slurp(path) == svg);
    std::remove(path.c_str());
}

TEST_CASE("MIXRES_SEED in the environment overrides --seed") {
    setenv("MIXRES_SEED", "11", 1);
    auto env_run = run_cli({"certify", kFamily, "--json", "--seed", "7"});
    unsetenv("MIXRES_SEED");
    REQUIRE(env_run.code == 0);
    json doc = json::parse(env_run.out);
    CHECK(doc["input"]["seed"] == 11);

    auto plain = run_cli({"certify", kFamily, "--json", "--seed", "11"});
    CHECK(plain.out == env_run.out);
}

}  // TEST_SUITE("cli")
