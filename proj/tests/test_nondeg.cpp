#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "mixres/errors.hpp"
#include "mixres/face_analysis.hpp"
#include "mixres/nondeg.hpp"
#include "mixres/parser.hpp"
#include "test_util.hpp"

using namespace mixres;
using testutil::family;
using testutil::mono;
using testutil::random_point;

namespace {

WeightVector wv(std::vector<long long> e) { return WeightVector(std::move(e)); }

// Phase-minimization oracle: min over phi of |v - e^{i phi} w|^2 on a grid.
double grid_residual(const MixedPolynomial& f, const std::vector<std::complex<double>>& z) {
    const int n = f.n();
    std::vector<std::complex<double>> v(n), w(n);
    for (int j = 1; j <= n; ++j) {
        v[j - 1] = std::conj(evaluate(wirtinger(f, j, WirtingerKind::dz), z));
        w[j - 1] = evaluate(wirtinger(f, j, WirtingerKind::dzbar), z);
    }
    double best = -1.0;
    for (int step = 0; step < 2000; ++step) {
        double phi = 2.0 * 3.14159265358979323846 * step / 2000.0;
        std::complex<double> phase = std::polar(1.0, phi);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += std::norm(v[j] - phase * w[j]);
        if (best < 0 || acc < best) best = acc;
    }
    return best;
}

}  // namespace

TEST_SUITE("nondeg") {

TEST_CASE("criticality residual at explicit points") {
    // z1*zb1 is critical everywhere: both gradients equal z1 up to conjugation.
    MixedPolynomial r1 = mono(1, 1, {1}, {1});
    CHECK(criticality_residual(r1, {{1.0, 0.0}}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(criticality_residual(r1, {{0.3, -0.8}}) < 1e-12);

    // Holomorphic germs: the residual is the squared gradient norm.
    MixedPolynomial h = parse("z1^2 + z2^2", 2);
    std::vector<std::complex<double>> z = {{1.0, 1.0}, {2.0, 0.0}};
    CHECK(criticality_residual(h, z) == doctest::Approx(4.0 * (2.0 + 4.0)));
    MixedPolynomial hb = parse("zb1^2", 1);
    CHECK(criticality_residual(hb, {{0.6, 0.8}}) == doctest::Approx(4.0));

    // Known zero of the lower edge face function: z2^3*(zb1^2 + zb2^3) at
    // (-i, 1) vanishes with anti-holomorphic gradient (2i, 3).
    MixedPolynomial fp = face_function(family(4, 0), wv({3, 2}));
    std::vector<std::complex<double>> zp = {{0.0, -1.0}, {1.0, 0.0}};
    CHECK(std::abs(evaluate(fp, zp)) < 1e-14);
    CHECK(criticality_residual(fp, zp) == doctest::Approx(13.0));
}

TEST_CASE("criticality residual matches the phase-grid oracle") {
    std::mt19937_64 rng(404);
    int seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        MixedPolynomial f = testutil::random_poly(rng, 2, 5, 4);
        if (f.is_zero()) continue;
        std::vector<std::complex<double>> z = random_point(rng, 2, 0.5, 1.5);
        double exact = criticality_residual(f, z);
        double grid = grid_residual(f, z);
        CHECK(exact >= -1e-12);
        // The grid overshoots by at most the phase step curvature.
        CHECK(exact <= grid + 1e-9);
        CHECK(grid - exact <= 1e-4 * (1.0 + grid));
        ++seen;
    }
    CHECK(seen >= 30);
}

TEST_CASE("vertex rule classifies single-monomial faces exactly") {
    MixedPolynomial f = family(4, 0);
    CHECK(vertex_rule(f, wv({2, 1})) == NondegStatus::ND_EXACT);
    CHECK(vertex_rule(f, wv({1, 1})) == NondegStatus::STRONGLY_ND_EXACT);
    CHECK(vertex_rule(f, wv({1, 2})) == NondegStatus::STRONGLY_ND_EXACT);
    CHECK(vertex_rule(f, wv({2, 3})) == NondegStatus::STRONGLY_ND_EXACT);

    // Edge weights carry one-dimensional faces.
    CHECK_THROWS_AS(vertex_rule(f, wv({3, 2})), NotASingleMonomialVertex);
    CHECK_THROWS_AS(vertex_rule(f, wv({3, 4})), NotASingleMonomialVertex);

    // A vertex carried by two terms is out of scope for the exact rule.
    MixedPolynomial g = mono(2, 1, {2, 0}, {0, 1}) + mono(2, 1, {1, 1}, {1, 0});
    CHECK_THROWS_AS(vertex_rule(g, wv({1, 1})), NotASingleMonomialVertex);
}

TEST_CASE("sampling clears the two edge faces of the worked family") {
    MixedPolynomial f = family(4, 0);
    for (long long q : {2LL, 4LL}) {
        CAPTURE(q);
        CriticalityReport rep = sample_nondegeneracy(f, wv({3, q}), 64, 3);
        CHECK(rep.verdict == NondegStatus::NO_VIOLATION_FOUND);
        CHECK(!rep.exact);
        CHECK(!rep.violation.has_value());
        CHECK(rep.samples == 64);
        // On the slice, zeros of the face function keep a criticality residual
        // of order one, so nothing approaches the violation thresholds.
        CHECK(rep.min_residual > 1e-2);
    }

    // Same seed, same outcome; the report records the seed it used.
    CriticalityReport a = sample_nondegeneracy(f, wv({3, 2}), 32, 11);
    CriticalityReport b = sample_nondegeneracy(f, wv({3, 2}), 32, 11);
    CHECK(a.seed == 11);
    CHECK(a.min_residual == b.min_residual);
}

TEST_CASE("single-monomial faces short-circuit to an exact verdict") {
    CriticalityReport rep = sample_nondegeneracy(family(4, 0), wv({2, 1}), 64, 9);
    CHECK(rep.verdict == NondegStatus::NO_VIOLATION_FOUND);
    CHECK(rep.exact);
    CHECK(rep.samples == 0);
    CHECK(rep.min_residual == -1.0);
}

TEST_CASE("degenerate faces produce certified violations") {
    // (z1 - z2)^2: every zero along z1 = z2 is critical.
    MixedPolynomial sq = parse("z1^2 - 2*z1*z2 + z2^2", 2);
    CriticalityReport rep = sample_nondegeneracy(sq, wv({1, 1}), 64, 17);
    REQUIRE(rep.verdict == NondegStatus::VIOLATION);
    REQUIRE(rep.violation.has_value());
    const auto& z = *rep.violation;
    REQUIRE(z.size() == 2);
    for (const auto& c : z) CHECK(std::abs(c) > 1e-3);
    CHECK(std::abs(evaluate(sq, z)) < 1e-10);
    CHECK(criticality_residual(sq, z) < 1e-10);
    CHECK(std::abs(z[0] - z[1]) < 1e-4);
    // The slice representative balances the moduli product at one.
    CHECK(std::abs(z[0] * z[1]) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.min_residual < 1e-9);

    // Real mixed cone z1*zb1 - z2*zb2: the whole |z1| = |z2| torus is critical.
    MixedPolynomial cone = mono(2, 1, {1, 0}, {1, 0}) + mono(2, -1, {0, 1}, {0, 1});
    CriticalityReport rep2 = sample_nondegeneracy(cone, wv({1, 1}), 64, 23);
    REQUIRE(rep2.verdict == NondegStatus::VIOLATION);
    const auto& z2 = *rep2.violation;
    CHECK(std::abs(std::abs(z2[0]) - std::abs(z2[1])) < 1e-6);
}

TEST_CASE("per-class sweep over the dual diagram") {
    NondegReport rep = check_nondegeneracy(family(4, 0), 48, 5);
    REQUIRE(rep.faces.size() == 5);
    CHECK(!rep.any_violation);

    std::vector<std::vector<long long>> order = {{2, 1}, {3, 2}, {1, 1}, {3, 4}, {3, 5}};
    for (int i = 0; i < 5; ++i) CHECK(rep.faces[i].face_weight == wv(order[i]));

    CHECK(rep.faces[0].verdict == NondegStatus::ND_EXACT);
    CHECK(rep.faces[0].exact);
    CHECK(rep.faces[1].verdict == NondegStatus::NO_VIOLATION_FOUND);
    CHECK(!rep.faces[1].exact);
    CHECK(rep.faces[2].verdict == NondegStatus::STRONGLY_ND_EXACT);
    CHECK(rep.faces[2].exact);
    CHECK(rep.faces[3].verdict == NondegStatus::NO_VIOLATION_FOUND);
    CHECK(rep.faces[4].verdict == NondegStatus::STRONGLY_ND_EXACT);

    NondegReport deg = check_nondegeneracy(parse("z1^2 - 2*z1*z2 + z2^2", 2), 48, 5);
    REQUIRE(deg.faces.size() == 3);
    CHECK(deg.any_violation);
    CHECK(deg.faces[0].verdict == NondegStatus::STRONGLY_ND_EXACT);
    CHECK(deg.faces[1].face_weight == wv({1, 1}));
    CHECK(deg.faces[1].verdict == NondegStatus::VIOLATION);
    CHECK(deg.faces[2].verdict == NondegStatus::STRONGLY_ND_EXACT);
}

TEST_CASE("edge face functions take the value one at the reference points") {
    MixedPolynomial fp = face_function(family(4, 0), wv({3, 2}));
    std::vector<std::complex<double>> zp = {{std::sqrt(1.5), 0.0},
                                            {std::cbrt(0.5), 0.0}};
    CHECK(std::abs(evaluate(fp, zp) - 1.0) < 1e-12);

    MixedPolynomial fq = face_function(family(4, 0), wv({3, 4}));
    std::vector<std::complex<double>> zq = {{std::sqrt(0.5), 0.0},
                                            {std::cbrt(1.75), 0.0}};
    CHECK(std::abs(evaluate(fq, zq) - 1.0) < 1e-12);
}

TEST_CASE("verdict strings are stable") {
    CHECK(to_string(NondegStatus::STRONGLY_ND_EXACT) == "STRONGLY_ND_EXACT");
    CHECK(to_string(NondegStatus::ND_EXACT) == "ND_EXACT");
    CHECK(to_string(NondegStatus::NO_VIOLATION_FOUND) == "NO_VIOLATION_FOUND");
    CHECK(to_string(NondegStatus::VIOLATION) == "VIOLATION");
}

TEST_CASE("sweep smoke test on random germs") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 8; ++trial) {
        MixedPolynomial f = testutil::random_convenient2(rng, 3, 8);
        NondegReport rep = check_nondegeneracy(f, 8, 1000 + trial);
        DualDiagram2D dd = dual_diagram(f);
        REQUIRE(rep.faces.size() == dd.classes.size());
        for (std::size_t i = 0; i < rep.faces.size(); ++i) {
            CHECK(rep.faces[i].face_weight == dd.classes[i].representative);
            if (rep.faces[i].exact) {
                CHECK((rep.faces[i].verdict == NondegStatus::STRONGLY_ND_EXACT ||
                       rep.faces[i].verdict == NondegStatus::ND_EXACT ||
                       rep.faces[i].verdict == NondegStatus::NO_VIOLATION_FOUND));
            }
            if (rep.faces[i].verdict == NondegStatus::VIOLATION) {
                REQUIRE(rep.faces[i].violation.has_value());
                MixedPolynomial ff = face_function(f, rep.faces[i].face_weight);
                CHECK(std::abs(evaluate(ff, *rep.faces[i].violation)) < 1e-10);
                CHECK(criticality_residual(ff, *rep.faces[i].violation) < 1e-10);
            }
        }
    }
}

}
