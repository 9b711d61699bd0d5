#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixres/face_analysis.hpp"
#include "mixres/fan.hpp"

namespace mixres {

// Monomial c * u^a * ubar^b in chart coordinates. Exponents may be negative
// inside residual parts; such terms still extend by 0 to the divisor u_j = 0
// because a_j + b_j >= 1 holds there.
struct ChartMonomial {
    GaussianRational coeff;
    std::vector<int> u_exps;
    std::vector<int> ubar_exps;

    friend bool operator==(const ChartMonomial& x, const ChartMonomial& y) {
        return x.coeff == y.coeff && x.u_exps == y.u_exps && x.ubar_exps == y.ubar_exps;
    }
};

std::string render(const std::vector<ChartMonomial>& monomials, const std::string& var = "u");

std::complex<double> evaluate_chart(const std::vector<ChartMonomial>& monomials,
                                    const std::vector<std::complex<double>>& u);

// Monomial morphism of the chart of a full-dimensional regular cone:
// z_i = prod_j u_j^{m[i][j]} where column j is the j-th cone vertex.
struct ChartMap {
    SimplicialCone sigma;
    std::vector<std::vector<long long>> z_exps;
};

ChartMap chart_map(const SimplicialCone& sigma);

std::vector<std::complex<double>> apply_chart(const ChartMap& map,
                                              const std::vector<std::complex<double>>& u);

// Raw pull-back of f along the chart of sigma: term by term,
// u_j exponent = P_j(nu), ubar_j exponent = P_j(mu). Sorted and merged.
std::vector<ChartMonomial> pullback(const MixedPolynomial& f, const SimplicialCone& sigma);

// pi*_sigma f = prod_{j<=k} u_j^{(r_j+p_j)/2} ubar_j^{(r_j-p_j)/2} *
// (f_delta + residual), split along the sub-cone tau spanned by the first k
// vertices (all strictly positive).
struct ChartFactorization {
    SimplicialCone sigma;
    int k = 0;
    std::vector<long long> rdeg;  // r_j = d(P_j), j < k
    std::vector<long long> pdeg;  // common polar degree of the P_j face
    // (u_j, ubar_j) exponents of the extracted monomial, j < k.
    std::vector<std::pair<long long, long long>> monomial_factor;
    std::vector<std::vector<int>> delta_points;  // intersection of the k face point sets

    // Terms with nu + mu on every face: free of u_1..u_k.
    std::vector<ChartMonomial> f_tilde_delta;

    struct ResidualTerm {
        ChartMonomial mono;
        std::vector<long long> a;  // u_j exponent, j < k (can be negative)
        std::vector<long long> b;  // ubar_j exponent, j < k (can be negative)
        long long lambda;          // min over off-face j of P_j(nu+mu) - r_j
        int source_term;           // index into f.terms()
    };
    std::vector<ResidualTerm> residual;

    std::optional<long long> lambda_tau;  // min residual lambda; empty when no residual
};

ChartFactorization factorize(const MixedPolynomial& f, const SimplicialCone& sigma, int k);

// Lambda(tau) for a cone with strictly positive vertices: the minimum of
// P_j(nu + mu) - d(P_j) over support points off the face of P_j. Empty when
// every support point lies on every vertex face (then the pull-back has no
// residual part in any chart containing tau).
std::optional<long long> lambda_of_cone(const MixedPolynomial& f, const SimplicialCone& tau);

enum class ProbeStatus { EMPTY, NONEMPTY, UNKNOWN };

struct ProbeOptions {
    int starts = 256;
    int max_iterations = 200;
    double success_residual = 1e-10;
    double give_up_residual = 1e-4;
    std::uint64_t seed = 0;
};

// Emptiness probe for the open strict transform piece over the tau orbit,
// computed in the chart of sigma: solutions of f_delta = 0 with all free
// coordinates nonzero. Exact when f_delta is a monomial or constant;
// otherwise a seeded least-squares search that can return NONEMPTY (witness
// found) or UNKNOWN, never EMPTY.
struct ProbeResult {
    ProbeStatus status = ProbeStatus::UNKNOWN;
    bool exact = false;
    std::vector<std::complex<double>> witness;  // free chart coordinates, NONEMPTY only
    double residual = 0.0;
};

ProbeResult strict_transform_probe(const MixedPolynomial& f, const SimplicialCone& sigma, int k,
                                   const ProbeOptions& options = {});

enum class StarStatus { HOLDS, VIOLATED, UNKNOWN };

// Smoothness certificate for the strict transform along a convenient
// admissible regular subdivision, n = 2. The conservative exponent list
// counts UNKNOWN probes as populated; the optimistic list only counts found
// witnesses.
struct SmoothnessCertificate {
    struct ConeReport {
        SimplicialCone tau;
        std::optional<long long> lambda;
        ProbeStatus status = ProbeStatus::UNKNOWN;
        ProbeResult probe;
        std::vector<std::string> charts_probed;
    };
    std::vector<ConeReport> per_cone;
    std::vector<long long> L_conservative;
    std::vector<long long> L_optimistic;
    std::optional<long long> lambda_conservative;
    std::optional<long long> lambda_optimistic;
    std::string smoothness_class;  // "real-analytic" or "C^{m}" with m = Lambda - 1
    StarStatus assumption_star = StarStatus::UNKNOWN;
    std::optional<std::string> star_witness;  // offending chart when VIOLATED
    std::vector<std::string> notes;
};

SmoothnessCertificate certify(const MixedPolynomial& f, ConeSubdivision& s,
                              const ProbeOptions& options = {});

}  // namespace mixres
