#include "mixres/nondeg.hpp"

#include <cmath>
#include <random>

#include "mixres/errors.hpp"
#include "mixres/face_analysis.hpp"
#include "mixres/numeric.hpp"

namespace mixres {

namespace {

// v_j = conj(df/dz_j), w_j = df/dzbar_j at z.
void gradients(const MixedPolynomial& f, const std::vector<std::complex<double>>& z,
               std::vector<std::complex<double>>& v, std::vector<std::complex<double>>& w) {
    const int n = f.n();
    v.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int j = 1; j <= n; ++j) {
        v[j - 1] = std::conj(evaluate(wirtinger(f, j, WirtingerKind::dz), z));
        w[j - 1] = evaluate(wirtinger(f, j, WirtingerKind::dzbar), z);
    }
}

}  // namespace

double criticality_residual(const MixedPolynomial& f,
                            const std::vector<std::complex<double>>& z) {
    std::vector<std::complex<double>> v, w;
    gradients(f, z, v, w);
    double nv = 0.0, nw = 0.0;
    std::complex<double> inner = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        nv += std::norm(v[j]);
        nw += std::norm(w[j]);
        inner += v[j] * std::conj(w[j]);
    }
    return nv + nw - 2.0 * std::abs(inner);
}

std::string to_string(NondegStatus s) {
    switch (s) {
        case NondegStatus::STRONGLY_ND_EXACT: return "STRONGLY_ND_EXACT";
        case NondegStatus::ND_EXACT: return "ND_EXACT";
        case NondegStatus::NO_VIOLATION_FOUND: return "NO_VIOLATION_FOUND";
        case NondegStatus::VIOLATION: return "VIOLATION";
    }
    return "?";
}

NondegStatus vertex_rule(const MixedPolynomial& f, const WeightVector& P) {
    Face fc = face(f, P);
    MixedPolynomial face_fn = face_function(f, P);
    if (fc.dim != 0 || face_fn.terms().size() != 1) throw NotASingleMonomialVertex();
    const MixedTerm& t = face_fn.terms().front();
    return t.exps.nu == t.exps.mu ? NondegStatus::ND_EXACT : NondegStatus::STRONGLY_ND_EXACT;
}

CriticalityReport sample_nondegeneracy(const MixedPolynomial& f, const WeightVector& P,
                                       int samples, std::uint64_t seed) {
    MixedPolynomial face_fn = face_function(f, P);
    const int n = f.n();
    const double threshold = 1e-10;
    const double torus_guard = 1e-3;

    CriticalityReport report{P, NondegStatus::NO_VIOLATION_FOUND, false, std::nullopt, -1.0,
                             samples, seed};

    // A single monomial never vanishes on the torus, so no violation exists.
    if (face_fn.terms().size() == 1) {
        report.exact = true;
        report.samples = 0;
        return report;
    }

    // Unknowns: interleaved re/im of z, then the phase phi aligning the two
    // gradients.  Residual: (Re f, Im f, components of v - e^{i phi} w,
    // sum_j p_j log|z_j|).  The last row pins the orbit of the weight action
    // z_j -> t^{p_j} z_j, a symmetry of the face function; every zero has a
    // representative on the slice, and the slice keeps genuine cancellation
    // points at moduli of order one, so the absolute thresholds below are
    // meaningful.
    auto unpack = [n](const std::vector<double>& x) {
        std::vector<std::complex<double>> z(n);
        for (int j = 0; j < n; ++j) z[j] = {x[2 * j], x[2 * j + 1]};
        return z;
    };
    auto slice_gap = [&](const std::vector<std::complex<double>>& z) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += static_cast<double>(P[j]) * std::log(std::abs(z[j]));
        return s;
    };
    auto residual_fn = [&](const std::vector<double>& x) {
        std::vector<std::complex<double>> z = unpack(x);
        std::complex<double> phase = std::polar(1.0, x[2 * n]);
        std::vector<double> r;
        std::complex<double> value = evaluate(face_fn, z);
        r.push_back(value.real());
        r.push_back(value.imag());
        std::vector<std::complex<double>> v, w;
        gradients(face_fn, z, v, w);
        for (int j = 0; j < n; ++j) {
            std::complex<double> d = v[j] - phase * w[j];
            r.push_back(d.real());
            r.push_back(d.imag());
        }
        r.push_back(slice_gap(z));
        return r;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_mod(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);

    for (int start = 0; start < samples; ++start) {
        std::vector<double> x0(2 * n + 1);
        for (int j = 0; j < n; ++j) {
            double m = std::exp(log_mod(rng));
            double ph = angle(rng);
            x0[2 * j] = m * std::cos(ph);
            x0[2 * j + 1] = m * std::sin(ph);
        }
        x0[2 * n] = angle(rng);
        LeastSquaresResult ls = least_squares(residual_fn, x0, 200, threshold * 1e-2);
        std::vector<std::complex<double>> z = unpack(ls.x);
        bool on_torus = true;
        for (const auto& c : z) on_torus = on_torus && std::abs(c) > 0.0;
        if (!on_torus) continue;
        // Project along the weight action orbit onto the slice; zeros and
        // criticality are invariant under the projection.
        double pp = 0.0;
        for (int j = 0; j < n; ++j) pp += static_cast<double>(P[j]) * static_cast<double>(P[j]);
        double sigma = -slice_gap(z) / pp;
        for (int j = 0; j < n; ++j) z[j] *= std::exp(sigma * static_cast<double>(P[j]));
        double min_mod = 1.0;
        for (const auto& c : z) min_mod = std::min(min_mod, std::abs(c));
        if (min_mod <= torus_guard) continue;
        double face_value = std::abs(evaluate(face_fn, z));
        double crit = criticality_residual(face_fn, z);
        double combined = face_value * face_value + crit;
        if (report.min_residual < 0 || combined < report.min_residual)
            report.min_residual = combined;
        if (face_value < threshold && crit < threshold) {
            report.verdict = NondegStatus::VIOLATION;
            report.violation = z;
            return report;
        }
    }
    return report;
}

NondegReport check_nondegeneracy(const MixedPolynomial& f, int samples, std::uint64_t seed) {
    DualDiagram2D diagram = dual_diagram(f);
    NondegReport report;
    std::uint64_t index = 0;
    for (const auto& cls : diagram.classes) {
        ++index;
        const WeightVector& w = cls.representative;
        Face fc = face(f, w);
        if (fc.dim == 0 && fc.points.size() == 1 &&
            face_function(f, w).terms().size() == 1) {
            CriticalityReport row{w, vertex_rule(f, w), true, std::nullopt, -1.0, 0, seed};
            report.faces.push_back(std::move(row));
            continue;
        }
        std::uint64_t class_seed = seed ^ (0x9E3779B97F4A7C15ull * index);
        CriticalityReport row = sample_nondegeneracy(f, w, samples, class_seed);
        if (row.verdict == NondegStatus::VIOLATION) report.any_violation = true;
        report.faces.push_back(std::move(row));
    }
    return report;
}

}  // namespace mixres
