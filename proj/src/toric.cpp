#include "mixres/toric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mixres/errors.hpp"
#include "mixres/numeric.hpp"

namespace mixres {

namespace {

std::complex<double> int_pow(std::complex<double> base, int e) {
    if (e < 0) return 1.0 / int_pow(base, -e);
    std::complex<double> acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

std::string cone_label(const SimplicialCone& c) {
    std::string s = "Cone(";
    for (int j = 0; j < c.k(); ++j) {
        if (j) s += ",";
        s += "(";
        for (int i = 0; i < c.n(); ++i) {
            if (i) s += ",";
            s += std::to_string(c.vertices[j][i]);
        }
        s += ")";
    }
    return s + ")";
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t h = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    h ^= h >> 30;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 27;
    return h;
}

}  // namespace

std::string render(const std::vector<ChartMonomial>& monomials, const std::string& var) {
    if (monomials.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : monomials) {
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < m.u_exps.size(); ++i) {
            if (m.u_exps[i] != 0) {
                std::string s = var + std::to_string(i + 1);
                if (m.u_exps[i] != 1) s += "^" + std::to_string(m.u_exps[i]);
                factors.push_back(s);
            }
        }
        for (std::size_t i = 0; i < m.ubar_exps.size(); ++i) {
            if (m.ubar_exps[i] != 0) {
                std::string s = var + "b" + std::to_string(i + 1);
                if (m.ubar_exps[i] != 1) s += "^" + std::to_string(m.ubar_exps[i]);
                factors.push_back(s);
            }
        }
        const GaussianRational& c = m.coeff;
        bool has_both = c.re != 0 && c.im != 0;
        bool neg = !has_both && ((c.im == 0) ? (c.re < 0) : (c.im < 0));
        std::string coeff_str;
        if (has_both)
            coeff_str = to_string(c);
        else {
            GaussianRational mag = neg ? -c : c;
            coeff_str = to_string(mag);
            if (coeff_str == "1" && !factors.empty()) coeff_str.clear();
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body = coeff_str;
        for (const auto& f : factors) {
            if (!body.empty()) body += "*";
            body += f;
        }
        if (body.empty()) body = "1";
        out += body;
    }
    return out;
}

std::complex<double> evaluate_chart(const std::vector<ChartMonomial>& monomials,
                                    const std::vector<std::complex<double>>& u) {
    std::complex<double> acc = 0.0;
    for (const auto& m : monomials) {
        std::complex<double> v = m.coeff.to_complex();
        for (std::size_t i = 0; i < m.u_exps.size(); ++i) v *= int_pow(u[i], m.u_exps[i]);
        for (std::size_t i = 0; i < m.ubar_exps.size(); ++i)
            v *= int_pow(std::conj(u[i]), m.ubar_exps[i]);
        acc += v;
    }
    return acc;
}

ChartMap chart_map(const SimplicialCone& sigma) {
    if (sigma.k() != sigma.n()) throw NotFullDimensional();
    if (!is_regular(sigma)) throw NotRegular();
    ChartMap map{sigma, {}};
    map.z_exps.assign(sigma.n(), std::vector<long long>(sigma.k()));
    for (int i = 0; i < sigma.n(); ++i)
        for (int j = 0; j < sigma.k(); ++j) map.z_exps[i][j] = sigma.vertices[j][i];
    return map;
}

std::vector<std::complex<double>> apply_chart(const ChartMap& map,
                                              const std::vector<std::complex<double>>& u) {
    std::vector<std::complex<double>> z(map.z_exps.size(), 1.0);
    for (std::size_t i = 0; i < map.z_exps.size(); ++i)
        for (std::size_t j = 0; j < map.z_exps[i].size(); ++j)
            z[i] *= int_pow(u[j], static_cast<int>(map.z_exps[i][j]));
    return z;
}

std::vector<ChartMonomial> pullback(const MixedPolynomial& f, const SimplicialCone& sigma) {
    chart_map(sigma);  // validates full dimension and regularity
    const int n = f.n();
    if (sigma.n() != n) throw Error("chart arity", "cone and polynomial dimensions differ");
    std::map<std::pair<std::vector<int>, std::vector<int>>, GaussianRational> merged;
    for (const auto& t : f.terms()) {
        std::vector<int> ue(n), be(n);
        for (int j = 0; j < n; ++j) {
            ue[j] = static_cast<int>(sigma.vertices[j].dot(t.exps.nu));
            be[j] = static_cast<int>(sigma.vertices[j].dot(t.exps.mu));
        }
        merged[{ue, be}] += t.coeff;
    }
    std::vector<ChartMonomial> out;
    for (auto& [exps, coeff] : merged)
        if (!coeff.is_zero()) out.push_back({coeff, exps.first, exps.second});
    return out;
}

ChartFactorization factorize(const MixedPolynomial& f, const SimplicialCone& sigma, int k) {
    chart_map(sigma);  // validates
    const int n = f.n();
    if (sigma.n() != n) throw Error("chart arity", "cone and polynomial dimensions differ");
    if (k < 1 || k > n) throw Error("factorization split", "k must be between 1 and n");
    if (f.is_zero()) throw EmptyPolynomial();

    ChartFactorization fact;
    fact.sigma = sigma;
    fact.k = k;

    std::vector<std::set<std::vector<int>>> face_points(k);
    for (int j = 0; j < k; ++j) {
        if (!sigma.vertices[j].strictly_positive()) throw NonStrictVertex(j + 1);
        FaceDegreeRecord rec = degrees(f, sigma.vertices[j]);
        if (!rec.strongly_mixed) throw NotStronglyMixedHomogeneous(j + 1);
        fact.rdeg.push_back(rec.rdeg);
        fact.pdeg.push_back(*rec.pdeg);
        fact.monomial_factor.push_back(
            {(rec.rdeg + *rec.pdeg) / 2, (rec.rdeg - *rec.pdeg) / 2});
        for (const auto& p : rec.face_points) face_points[j].insert(p);
    }

    std::set<std::vector<int>> delta = face_points[0];
    for (int j = 1; j < k; ++j) {
        std::set<std::vector<int>> keep;
        for (const auto& p : delta)
            if (face_points[j].count(p)) keep.insert(p);
        delta = std::move(keep);
    }
    if (delta.empty()) throw EmptyFaceIntersection();
    fact.delta_points.assign(delta.begin(), delta.end());

    std::map<std::pair<std::vector<int>, std::vector<int>>, GaussianRational> delta_merged;
    for (int t = 0; t < static_cast<int>(f.terms().size()); ++t) {
        const auto& term = f.terms()[t];
        std::vector<int> point(n);
        for (int i = 0; i < n; ++i) point[i] = term.exps.nu[i] + term.exps.mu[i];

        std::vector<int> ue(n), be(n);
        for (int j = 0; j < n; ++j) {
            long long u = sigma.vertices[j].dot(term.exps.nu);
            long long b = sigma.vertices[j].dot(term.exps.mu);
            if (j < k) {
                u -= fact.monomial_factor[j].first;
                b -= fact.monomial_factor[j].second;
            }
            ue[j] = static_cast<int>(u);
            be[j] = static_cast<int>(b);
        }

        if (delta.count(point)) {
            delta_merged[{ue, be}] += term.coeff;
        } else {
            ChartFactorization::ResidualTerm rt;
            rt.mono = {term.coeff, ue, be};
            long long lambda = -1;
            for (int j = 0; j < k; ++j) {
                rt.a.push_back(ue[j]);
                rt.b.push_back(be[j]);
                if (!face_points[j].count(point)) {
                    long long gap = sigma.vertices[j].dot(point) - fact.rdeg[j];
                    if (lambda < 0 || gap < lambda) lambda = gap;
                }
            }
            rt.lambda = lambda;
            rt.source_term = t;
            fact.residual.push_back(std::move(rt));
            if (lambda >= 0 && (!fact.lambda_tau || lambda < *fact.lambda_tau))
                fact.lambda_tau = lambda;
        }
    }
    for (auto& [exps, coeff] : delta_merged)
        if (!coeff.is_zero()) fact.f_tilde_delta.push_back({coeff, exps.first, exps.second});
    return fact;
}

std::optional<long long> lambda_of_cone(const MixedPolynomial& f, const SimplicialCone& tau) {
    if (f.is_zero()) throw EmptyPolynomial();
    std::vector<std::set<std::vector<int>>> face_points(tau.k());
    std::vector<long long> d(tau.k());
    for (int j = 0; j < tau.k(); ++j) {
        if (!tau.vertices[j].strictly_positive()) throw NonStrictVertex(j + 1);
        Face fc = face(f, tau.vertices[j]);
        d[j] = fc.d;
        for (const auto& s : fc.points) face_points[j].insert(s.point);
    }
    std::optional<long long> lambda;
    for (const auto& s : support(f)) {
        std::optional<long long> term_lambda;
        for (int j = 0; j < tau.k(); ++j) {
            if (face_points[j].count(s.point)) continue;
            long long gap = tau.vertices[j].dot(s.point) - d[j];
            if (!term_lambda || gap < *term_lambda) term_lambda = gap;
        }
        if (term_lambda && (!lambda || *term_lambda < *lambda)) lambda = term_lambda;
    }
    return lambda;
}

ProbeResult strict_transform_probe(const MixedPolynomial& f, const SimplicialCone& sigma, int k,
                                   const ProbeOptions& options) {
    ChartFactorization fact = factorize(f, sigma, k);
    const int n = f.n();
    const int free_vars = n - k;

    ProbeResult result;
    if (fact.f_tilde_delta.empty()) {
        // The face part cancels identically: the whole torus slice lies in
        // the zero set.
        result.status = ProbeStatus::NONEMPTY;
        result.exact = true;
        result.witness.assign(free_vars, std::complex<double>(1.0, 0.0));
        return result;
    }
    if (fact.f_tilde_delta.size() == 1) {
        // A single monomial (or nonzero constant) never vanishes off the axes.
        result.status = ProbeStatus::EMPTY;
        result.exact = true;
        return result;
    }

    // Numeric search on the free coordinates; exponents there are nonnegative.
    // The common monomial factor is divided out first (it never vanishes on
    // the torus), and residuals are measured relative to the term magnitude
    // scale so shrinking all coordinates cannot fake a zero.
    std::vector<ChartMonomial> g;
    for (const auto& m : fact.f_tilde_delta) {
        ChartMonomial shrunk;
        shrunk.coeff = m.coeff;
        for (int j = k; j < n; ++j) {
            shrunk.u_exps.push_back(m.u_exps[j]);
            shrunk.ubar_exps.push_back(m.ubar_exps[j]);
        }
        g.push_back(std::move(shrunk));
    }
    for (int j = 0; j < free_vars; ++j) {
        int min_u = g[0].u_exps[j], min_b = g[0].ubar_exps[j];
        for (const auto& m : g) {
            min_u = std::min(min_u, m.u_exps[j]);
            min_b = std::min(min_b, m.ubar_exps[j]);
        }
        for (auto& m : g) {
            m.u_exps[j] -= min_u;
            m.ubar_exps[j] -= min_b;
        }
    }

    auto to_complex = [free_vars](const std::vector<double>& x) {
        std::vector<std::complex<double>> u(free_vars);
        for (int j = 0; j < free_vars; ++j) u[j] = {x[2 * j], x[2 * j + 1]};
        return u;
    };
    auto term_scale = [&g](const std::vector<std::complex<double>>& u) {
        double scale = 0.0;
        for (const auto& m : g) {
            double t = std::abs(m.coeff.to_complex());
            for (std::size_t j = 0; j < u.size(); ++j)
                t *= std::pow(std::abs(u[j]), m.u_exps[j] + m.ubar_exps[j]);
            scale += t;
        }
        return scale;
    };
    auto residual_fn = [&](const std::vector<double>& x) {
        std::vector<std::complex<double>> u = to_complex(x);
        std::complex<double> v = evaluate_chart(g, u);
        double scale = term_scale(u);
        if (scale <= 0.0) scale = 1.0;
        return std::vector<double>{v.real() / scale, v.imag() / scale};
    };

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> log_mod(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);

    double best = -1.0;
    for (int start = 0; start < options.starts; ++start) {
        std::vector<double> x0(2 * free_vars);
        for (int j = 0; j < free_vars; ++j) {
            double m = std::exp(log_mod(rng));
            double ph = phase(rng);
            x0[2 * j] = m * std::cos(ph);
            x0[2 * j + 1] = m * std::sin(ph);
        }
        LeastSquaresResult ls = least_squares(residual_fn, x0, options.max_iterations,
                                              options.success_residual);
        if (ls.objective >= options.success_residual && ls.objective < options.give_up_residual)
            ls = least_squares(residual_fn, ls.x, 4 * options.max_iterations,
                               options.success_residual);
        std::vector<std::complex<double>> u = to_complex(ls.x);
        double min_mod = 1.0;
        for (const auto& c : u) min_mod = std::min(min_mod, std::abs(c));
        if (ls.objective < options.success_residual && min_mod > 1e-3) {
            result.status = ProbeStatus::NONEMPTY;
            result.witness = u;
            result.residual = ls.objective;
            return result;
        }
        if (best < 0 || ls.objective < best) best = ls.objective;
    }
    result.status = ProbeStatus::UNKNOWN;
    result.residual = best;
    return result;
}

SmoothnessCertificate certify(const MixedPolynomial& f, ConeSubdivision& s,
                              const ProbeOptions& options) {
    if (f.n() != 2) throw UnsupportedDimension("certify");
    if (f.is_zero()) throw EmptyPolynomial();
    ConvenienceReport conv = is_convenient(f);
    if (!conv.convenient) throw NotConvenient(conv.missing_axis);
    FaceTypeVerdict verdict = classify_face_type(f);
    if (verdict.type == FaceType::NotOfType)
        throw PreconditionNotVerified(
            "certificate requires a strongly polar non-negative face type");
    if (!s.covers_quadrant())
        throw Error("subdivision of the quadrant", "maximal cones do not tile the quadrant");
    for (const auto& c : s.max_cones) {
        if (!is_regular(c)) throw NotRegular();
        if (!is_admissible(c, f))
            throw Error("admissible subdivision",
                        "cone " + cone_label(c) + " crosses a dual diagram ray");
    }
    if (!is_convenient_subdivision(s, f))
        throw Error("convenient subdivision", "axis cones are missing from the fan");

    SmoothnessCertificate cert;
    std::uint64_t probe_index = 0;

    auto rays = s.rays();
    // 1-dimensional cones through strictly positive rays: probe the free
    // coordinate in every adjacent chart.
    for (const auto& ray : rays) {
        if (!ray.strictly_positive()) continue;
        SmoothnessCertificate::ConeReport report;
        report.tau = SimplicialCone{{ray}};
        report.lambda = lambda_of_cone(f, report.tau);

        bool any_nonempty = false, any_unknown = false;
        ProbeResult chosen;
        bool have_chosen = false;
        for (const auto& mc : s.max_cones) {
            const WeightVector* other = nullptr;
            if (mc.vertices[0] == ray)
                other = &mc.vertices[1];
            else if (mc.vertices[1] == ray)
                other = &mc.vertices[0];
            if (!other) continue;
            SimplicialCone chart{{ray, *other}};
            report.charts_probed.push_back(cone_label(chart));
            ProbeOptions po = options;
            po.seed = mix_seed(options.seed, probe_index++);
            ProbeResult pr = strict_transform_probe(f, chart, 1, po);
            if (pr.status == ProbeStatus::NONEMPTY) {
                any_nonempty = true;
                chosen = pr;
                have_chosen = true;
                break;
            }
            if (pr.status == ProbeStatus::UNKNOWN) {
                any_unknown = true;
                if (!have_chosen || pr.residual < chosen.residual) {
                    chosen = pr;
                    have_chosen = true;
                }
            }
            if (!have_chosen) chosen = pr;
        }
        report.status = any_nonempty ? ProbeStatus::NONEMPTY
                        : any_unknown ? ProbeStatus::UNKNOWN
                                      : ProbeStatus::EMPTY;
        report.probe = chosen;
        report.probe.status = report.status;
        cert.per_cone.push_back(std::move(report));
    }
    // 2-dimensional cones with strictly positive vertices: the chart origin.
    for (const auto& mc : s.max_cones) {
        if (!mc.vertices[0].strictly_positive() || !mc.vertices[1].strictly_positive()) continue;
        SmoothnessCertificate::ConeReport report;
        report.tau = mc;
        report.lambda = lambda_of_cone(f, mc);
        report.charts_probed.push_back(cone_label(mc));
        ProbeOptions po = options;
        po.seed = mix_seed(options.seed, probe_index++);
        report.probe = strict_transform_probe(f, mc, 2, po);
        report.status = report.probe.status;
        cert.per_cone.push_back(std::move(report));
    }

    for (const auto& report : cert.per_cone) {
        if (!report.lambda) continue;
        if (report.status == ProbeStatus::NONEMPTY) {
            cert.L_conservative.push_back(*report.lambda);
            cert.L_optimistic.push_back(*report.lambda);
        } else if (report.status == ProbeStatus::UNKNOWN) {
            cert.L_conservative.push_back(*report.lambda);
        }
    }
    std::sort(cert.L_conservative.begin(), cert.L_conservative.end());
    std::sort(cert.L_optimistic.begin(), cert.L_optimistic.end());
    if (!cert.L_conservative.empty()) cert.lambda_conservative = cert.L_conservative.front();
    if (!cert.L_optimistic.empty()) cert.lambda_optimistic = cert.L_optimistic.front();
    cert.smoothness_class = cert.lambda_conservative
                                ? "C^" + std::to_string(*cert.lambda_conservative - 1)
                                : "real-analytic";

    // Corner analysis for the mixed strict/axis charts: the strict transform
    // avoids every corner whose chart-origin value is nonzero.
    cert.assumption_star = StarStatus::HOLDS;
    for (const auto& mc : s.max_cones) {
        bool p0 = mc.vertices[0].strictly_positive();
        bool p1 = mc.vertices[1].strictly_positive();
        if (p0 == p1) continue;  // interior charts are covered by their probes
        SimplicialCone chart{{p0 ? mc.vertices[0] : mc.vertices[1],
                              p0 ? mc.vertices[1] : mc.vertices[0]}};
        ChartFactorization fact = factorize(f, chart, 1);
        GaussianRational corner;
        for (const auto& m : fact.f_tilde_delta) {
            bool constant = true;
            for (std::size_t i = 1; i < m.u_exps.size(); ++i)
                if (m.u_exps[i] != 0 || m.ubar_exps[i] != 0) constant = false;
            if (constant) corner += m.coeff;
        }
        if (corner.is_zero()) {
            cert.assumption_star = StarStatus::VIOLATED;
            cert.star_witness = cone_label(chart);
            break;
        }
    }

    if (cert.lambda_conservative && cert.lambda_optimistic &&
        *cert.lambda_conservative != *cert.lambda_optimistic)
        cert.notes.push_back("conservative and optimistic exponents differ; the conservative "
                             "class is a lower bound");
    if (cert.lambda_conservative && *cert.lambda_conservative >= 2)
        cert.notes.push_back("certified class C^" + std::to_string(*cert.lambda_conservative - 1) +
                             " is sharper than the C^1 baseline");
    for (const auto& report : cert.per_cone)
        if (report.status == ProbeStatus::UNKNOWN)
            cert.notes.push_back("probe inconclusive on " + cone_label(report.tau) +
                                 "; counted as populated in the conservative exponent list");
    return cert;
}

}  // namespace mixres
