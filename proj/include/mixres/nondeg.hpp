// Mixed non-degeneracy of face functions: exact single-monomial rules plus a
// seeded numeric search for critical points of f_delta on the torus.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixres/mixed_poly.hpp"
#include "mixres/newton.hpp"

namespace mixres {

// Squared distance from criticality at z: with v = conj(grad_z f) and
// w = grad_zbar f, returns |v|^2 + |w|^2 - 2|<v,w>|, the minimum over phases
// phi of |v - e^{i phi} w|^2.  Zero exactly at mixed critical points.
double criticality_residual(const MixedPolynomial& f,
                            const std::vector<std::complex<double>>& z);

enum class NondegStatus {
    STRONGLY_ND_EXACT,   // single monomial, nu != mu: no torus critical point
    ND_EXACT,            // single monomial, nu == mu: nonvanishing on the torus
    NO_VIOLATION_FOUND,  // numeric search found no critical zero
    VIOLATION,           // numeric search found a critical zero on the torus
};

std::string to_string(NondegStatus s);

// Exact classification of a vertex face carried by a single term.  Throws
// NotASingleMonomialVertex when the face of P has dimension > 0 or more than
// one term.
NondegStatus vertex_rule(const MixedPolynomial& f, const WeightVector& P);

struct CriticalityReport {
    WeightVector face_weight;
    NondegStatus verdict;
    bool exact = false;
    // VIOLATION only: torus point with |f_delta| < 1e-10 and criticality
    // residual < 1e-10.
    std::optional<std::vector<std::complex<double>>> violation;
    double min_residual = -1.0;  // smallest |f_delta|^2 + residual seen
    int samples = 0;
    std::uint64_t seed = 0;
};

// Searches the torus for a zero of the face function of P that is also a
// mixed critical point.  The search works modulo the weight action
// z_j -> t^{p_j} z_j (a radial symmetry of the face function): candidates are
// projected onto the slice sum_j p_j log|z_j| = 0 before the thresholds
// apply, so shrinking toward the origin cannot fake a violation.  Exact for
// single-monomial faces (nonvanishing on the torus).  A numeric result never
// proves non-degeneracy.
CriticalityReport sample_nondegeneracy(const MixedPolynomial& f, const WeightVector& P,
                                       int samples, std::uint64_t seed);

struct NondegReport {
    std::vector<CriticalityReport> faces;  // one row per dual diagram class
    bool any_violation = false;
};

// Checks every weight class of the dual diagram (two variables only): the
// vertex rule where it applies, sampling elsewhere.
NondegReport check_nondegeneracy(const MixedPolynomial& f, int samples, std::uint64_t seed);

}  // namespace mixres
