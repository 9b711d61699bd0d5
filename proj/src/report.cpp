#include "mixres/report.hpp"

#include "json.hpp"
#include "mixres/errors.hpp"
#include "mixres/parser.hpp"

namespace mixres {

namespace {

using json = nlohmann::ordered_json;

json j_mpz(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

json j_rational(const Rational& q) { return json::array({j_mpz(q.get_num()), j_mpz(q.get_den())}); }

json j_coeff(const GaussianRational& c) {
    return json{{"re", j_rational(c.re)}, {"im", j_rational(c.im)}};
}

json j_weight(const WeightVector& w) {
    json a = json::array();
    for (long long e : w.entries()) a.push_back(e);
    return a;
}

template <typename T>
json j_ints(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(static_cast<long long>(e));
    return a;
}

json j_points(const std::vector<std::vector<int>>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(j_ints(p));
    return a;
}

json j_terms(const MixedPolynomial& f) {
    json a = json::array();
    for (const auto& t : f.terms())
        a.push_back(json{{"coeff", j_coeff(t.coeff)},
                         {"nu", j_ints(t.exps.nu)},
                         {"mu", j_ints(t.exps.mu)}});
    return a;
}

json j_chart_monomial(const ChartMonomial& m) {
    return json{{"coeff", j_coeff(m.coeff)}, {"u", j_ints(m.u_exps)}, {"ubar", j_ints(m.ubar_exps)}};
}

json j_cone(const SimplicialCone& c) {
    json a = json::array();
    for (const auto& v : c.vertices) a.push_back(j_weight(v));
    return a;
}

json j_boundary(const NewtonBoundary& b) {
    json edges = json::array();
    for (const auto& e : b.edges)
        edges.push_back(json{{"from", j_ints(e.from)},
                             {"to", j_ints(e.to)},
                             {"normal", j_weight(e.normal)}});
    return json{{"vertices", j_points(b.vertices)}, {"edges", edges}};
}

json j_diagram(const DualDiagram2D& d) {
    json rays = json::array();
    for (const auto& r : d.rays) rays.push_back(j_weight(r));
    json normals = json::array();
    for (const auto& r : d.edge_normals) normals.push_back(j_weight(r));
    json classes = json::array();
    for (const auto& c : d.classes) {
        json row{{"kind", c.kind == WeightClass::Kind::EdgeRay ? "edge-ray" : "sector"},
                 {"representative", j_weight(c.representative)}};
        if (c.kind == WeightClass::Kind::Sector)
            row["bounds"] = json::array({j_weight(c.bounds[0]), j_weight(c.bounds[1])});
        row["face_points"] = j_points(c.face_points);
        classes.push_back(row);
    }
    return json{{"rays", rays}, {"edge_normals", normals}, {"classes", classes}};
}

json j_face_table(const MixedPolynomial& f, const std::vector<FaceDegreeRecord>& table) {
    json rows = json::array();
    for (const auto& rec : table) {
        json terms = json::array();
        for (const auto& t : rec.terms)
            terms.push_back(json{{"term", t.term_index}, {"radial", t.radial}, {"polar", t.polar}});
        json row{{"weight", j_weight(rec.weight)},
                 {"face_points", j_points(rec.face_points)},
                 {"rdeg", rec.rdeg},
                 {"pdeg", rec.pdeg ? json(*rec.pdeg) : json(nullptr)},
                 {"strongly_mixed", rec.strongly_mixed},
                 {"polar_sign", to_string(rec.polar_sign)},
                 {"face_function", render(face_function(f, rec.weight))},
                 {"terms", terms}};
        rows.push_back(row);
    }
    return rows;
}

json j_subdivision(const ConeSubdivision& s) {
    ConeSubdivision& mutable_s = const_cast<ConeSubdivision&>(s);
    json vertices = json::array();
    for (const auto& r : mutable_s.rays()) vertices.push_back(j_weight(r));
    json cones = json::array();
    for (const auto& c : s.max_cones) {
        auto m = cone_matrix(c);
        long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        cones.push_back(json{{"matrix", json::array({j_ints(m[0]), j_ints(m[1])})}, {"det", det}});
    }
    return json{{"vertices", vertices}, {"cones", cones}};
}

json j_factorization(const ChartFactorization& fact) {
    json factor = json::array();
    for (const auto& [u, ub] : fact.monomial_factor)
        factor.push_back(json::array({u, ub}));
    json delta = json::array();
    for (const auto& m : fact.f_tilde_delta) delta.push_back(j_chart_monomial(m));
    json residual = json::array();
    for (const auto& rt : fact.residual)
        residual.push_back(json{{"monomial", j_chart_monomial(rt.mono)},
                                {"a", j_ints(rt.a)},
                                {"b", j_ints(rt.b)},
                                {"lambda", rt.lambda},
                                {"source_term", rt.source_term}});
    return json{{"cone", j_cone(fact.sigma)},
                {"k", fact.k},
                {"rdeg", j_ints(fact.rdeg)},
                {"pdeg", j_ints(fact.pdeg)},
                {"monomial_factor", factor},
                {"delta_points", j_points(fact.delta_points)},
                {"f_delta", delta},
                {"f_delta_rendered", render(fact.f_tilde_delta)},
                {"residual", residual},
                {"lambda", fact.lambda_tau ? json(*fact.lambda_tau) : json(nullptr)}};
}

json j_probe(const ProbeResult& p) {
    json row{{"status", to_string(p.status)}, {"exact", p.exact}};
    if (p.status == ProbeStatus::NONEMPTY) {
        json w = json::array();
        for (const auto& c : p.witness) w.push_back(json::array({c.real(), c.imag()}));
        row["witness"] = w;
    } else {
        row["witness"] = nullptr;
    }
    row["residual"] = p.exact ? json(nullptr) : json(p.residual);
    return row;
}

json j_certificate(const SmoothnessCertificate& cert) {
    json per_cone = json::array();
    for (const auto& r : cert.per_cone) {
        per_cone.push_back(json{{"cone", j_cone(r.tau)},
                                {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
                                {"status", to_string(r.status)},
                                {"charts_probed", r.charts_probed},
                                {"probe", j_probe(r.probe)}});
    }
    return json{
        {"per_cone", per_cone},
        {"L_conservative", j_ints(cert.L_conservative)},
        {"L_optimistic", j_ints(cert.L_optimistic)},
        {"lambda_conservative",
         cert.lambda_conservative ? json(*cert.lambda_conservative) : json(nullptr)},
        {"lambda_optimistic",
         cert.lambda_optimistic ? json(*cert.lambda_optimistic) : json(nullptr)},
        {"smoothness_class", cert.smoothness_class},
        {"assumption_star", to_string(cert.assumption_star)},
        {"star_witness", cert.star_witness ? json(*cert.star_witness) : json(nullptr)},
        {"notes", cert.notes}};
}

}  // namespace

std::string to_string(ProbeStatus s) {
    switch (s) {
        case ProbeStatus::EMPTY: return "EMPTY";
        case ProbeStatus::NONEMPTY: return "NONEMPTY";
        case ProbeStatus::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(StarStatus s) {
    switch (s) {
        case StarStatus::HOLDS: return "HOLDS";
        case StarStatus::VIOLATED: return "VIOLATED";
        case StarStatus::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(FaceType t) {
    switch (t) {
        case FaceType::StronglyPolarPositive: return "strongly-polar-positive";
        case FaceType::StronglyPolarNonNegative: return "strongly-polar-nonnegative";
        case FaceType::NotOfType: return "not-of-type";
    }
    return "?";
}

std::string to_string(PolarSign s) {
    switch (s) {
        case PolarSign::positive: return "positive";
        case PolarSign::zero: return "zero";
        case PolarSign::negative: return "negative";
        case PolarSign::mixed: return "mixed";
    }
    return "?";
}

AnalysisReport analyze(const std::string& expression, int n, const ReportOptions& options) {
    AnalysisReport rep;
    rep.expression = expression;
    rep.n = n;
    rep.options = options;
    rep.f = parse(expression, n);
    rep.convenience = is_convenient(rep.f);
    if (!rep.f.is_zero()) rep.support_points = support(rep.f);
    if (n == 2) {
        if (!rep.convenience.convenient) throw NotConvenient(rep.convenience.missing_axis);
        rep.boundary = newton_boundary(rep.f);
        rep.diagram = dual_diagram(rep.f);
        rep.verdict = classify_face_type(rep.f);
        rep.subdivision = canonical_subdivision(rep.f);
        if (options.with_certificate) {
            ProbeOptions po;
            po.starts = options.samples;
            po.seed = options.seed;
            rep.certificate = certify(rep.f, *rep.subdivision, po);
        }
    }
    return rep;
}

std::string emit_report_json(const AnalysisReport& report) {
    json root;
    root["schema"] = "mixres/1";
    root["input"] = json{{"expression", report.expression},
                         {"n", report.n},
                         {"samples", report.options.samples},
                         {"seed", report.options.seed}};
    root["polynomial"] = json{{"rendered", render(report.f)}, {"terms", j_terms(report.f)}};
    root["convenience"] =
        json{{"convenient", report.convenience.convenient},
             {"missing_axis", report.convenience.convenient
                                  ? json(nullptr)
                                  : json(report.convenience.missing_axis)}};
    json sup = json::array();
    for (const auto& s : report.support_points)
        sup.push_back(json{{"point", j_ints(s.point)}, {"terms", j_ints(s.term_indices)}});
    root["support"] = sup;
    root["newton_boundary"] = report.boundary ? j_boundary(*report.boundary) : json(nullptr);
    root["dual_diagram"] = report.diagram ? j_diagram(*report.diagram) : json(nullptr);
    root["face_table"] =
        report.verdict ? j_face_table(report.f, report.verdict->table) : json(nullptr);
    root["face_type"] =
        report.verdict
            ? json{{"type", to_string(report.verdict->type)},
                   {"offending_weight", report.verdict->offending_face
                                            ? j_weight(report.verdict->offending_face->weight)
                                            : json(nullptr)}}
            : json(nullptr);
    root["subdivision"] = report.subdivision ? j_subdivision(*report.subdivision) : json(nullptr);
    json pulls = json::array();
    for (const auto& fact : report.pullbacks) pulls.push_back(j_factorization(fact));
    root["pullbacks"] = pulls;
    root["certificate"] = report.certificate ? j_certificate(*report.certificate) : json(nullptr);
    return root.dump(2) + "\n";
}

}  // namespace mixres
