#include "mixres/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mixres/errors.hpp"
#include "mixres/lab.hpp"
#include "mixres/nondeg.hpp"
#include "mixres/parser.hpp"
#include "mixres/report.hpp"
#include "mixres/svg.hpp"

namespace mixres {

namespace {

std::string wstr(const WeightVector& w) {
    std::string s = "(";
    for (int i = 0; i < w.n(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string pstr(const std::vector<int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::string matstr(const SimplicialCone& c) {
    auto m = cone_matrix(c);
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(m[i][j]);
        s += "]";
    }
    return s + "]";
}

std::vector<long long> parse_int_list(const std::string& text, char sep) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw SyntaxError(0, "an integer list separated by '" + std::string(1, sep) + "'");
        }
    }
    if (out.empty()) throw SyntaxError(0, "a nonempty integer list");
    return out;
}

// "a,b;c,d" is the row-major matrix display; the cone vertices are its columns.
SimplicialCone parse_cone_matrix(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row, ','));
    if (rows.empty()) throw SyntaxError(0, "a matrix like \"a,b;c,d\"");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw SyntaxError(0, "rows of equal length");
    std::vector<std::vector<long long>> columns(rows[0].size(),
                                                std::vector<long long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) columns[j][i] = rows[i][j];
    return make_cone(columns);
}

std::string chart_desc(const SimplicialCone& c) {
    std::string s;
    for (int i = 0; i < c.n(); ++i) {
        if (i) s += ", ";
        s += "z" + std::to_string(i + 1) + " = ";
        std::string prod;
        for (int j = 0; j < c.k(); ++j) {
            long long e = c.vertices[j][i];
            if (e == 0) continue;
            if (!prod.empty()) prod += "*";
            prod += "u" + std::to_string(j + 1);
            if (e != 1) prod += "^" + std::to_string(e);
        }
        s += prod.empty() ? "1" : prod;
    }
    return s;
}

std::string factor_desc(const ChartFactorization& fact) {
    std::string s;
    for (int j = 0; j < fact.k; ++j) {
        auto [ue, be] = fact.monomial_factor[j];
        for (auto [name, e] : {std::pair<std::string, long long>{"u", ue}, {"ub", be}}) {
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += name + std::to_string(j + 1);
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

void print_face_table(std::ostream& out, const MixedPolynomial& f,
                      const std::vector<FaceDegreeRecord>& table) {
    out << "face table (weight | rdeg | pdeg | face points | face function):\n";
    for (const auto& rec : table) {
        out << "  " << std::left << std::setw(8) << wstr(rec.weight) << " " << std::right
            << std::setw(4) << rec.rdeg << " "
            << std::setw(4) << (rec.pdeg ? std::to_string(*rec.pdeg) : "-") << "   ";
        std::string pts;
        for (const auto& p : rec.face_points) pts += pstr(p) + " ";
        out << std::left << std::setw(18) << pts << " " << render(face_function(f, rec.weight))
            << "\n";
    }
}

int cmd_analyze(const std::string& expr, int n, bool as_json, std::ostream& out) {
    ReportOptions opts;
    AnalysisReport rep = analyze(expr, n, opts);
    if (as_json) {
        out << emit_report_json(rep);
        return 0;
    }
    out << "input: " << rep.expression << "  (n = " << rep.n << ")\n";
    out << "expanded: " << render(rep.f) << "\n";
    out << "convenient: " << (rep.convenience.convenient ? "yes" : "no") << "\n";
    out << "support:";
    for (const auto& s : rep.support_points) out << " " << pstr(s.point);
    out << "\n";
    if (rep.boundary) {
        out << "newton boundary vertices:";
        for (const auto& v : rep.boundary->vertices) out << " " << pstr(v);
        out << "\nedges:\n";
        for (const auto& e : rep.boundary->edges)
            out << "  " << pstr(e.from) << " -> " << pstr(e.to) << "  normal " << wstr(e.normal)
                << "\n";
    }
    if (rep.diagram) {
        out << "dual diagram rays:";
        for (const auto& r : rep.diagram->rays) out << " " << wstr(r);
        out << "\n";
    }
    if (rep.verdict) {
        print_face_table(out, rep.f, rep.verdict->table);
        out << "face type: " << to_string(rep.verdict->type);
        if (rep.verdict->offending_face)
            out << "  (offending weight " << wstr(rep.verdict->offending_face->weight) << ")";
        out << "\n";
    }
    if (rep.subdivision) {
        out << "canonical subdivision rays:";
        for (const auto& r : rep.subdivision->rays()) out << " " << wstr(r);
        out << "\ncones:\n";
        for (const auto& c : rep.subdivision->max_cones)
            out << "  " << matstr(c) << "\n";
    }
    return 0;
}

int cmd_subdivide(const std::string& expr, std::ostream& out) {
    MixedPolynomial f = parse(expr, 2);
    ConeSubdivision s = canonical_subdivision(f);
    out << "rays:";
    for (const auto& r : s.rays()) out << " " << wstr(r);
    out << "\ncones:\n";
    for (const auto& c : s.max_cones) {
        auto m = cone_matrix(c);
        long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        out << "  " << matstr(c) << "  det " << det << "  admissible "
            << (is_admissible(c, f) ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_pullback(const std::string& expr, const std::string& cone_text, int k,
                 std::ostream& out) {
    SimplicialCone sigma = parse_cone_matrix(cone_text);
    MixedPolynomial f = parse(expr, sigma.n());
    if (k < 0) {
        k = 0;
        while (k < sigma.k() && sigma.vertices[k].strictly_positive()) ++k;
        if (k == 0) throw NonStrictVertex(1);
    }
    ChartFactorization fact = factorize(f, sigma, k);
    out << "chart: " << chart_desc(sigma) << "\n";
    out << "pullback: " << render(pullback(f, sigma)) << "\n";
    out << "factored: " << factor_desc(fact) << " * (f_delta + residual)\n";
    out << "f_delta = " << render(fact.f_tilde_delta) << "\n";
    out << "residual:\n";
    for (const auto& rt : fact.residual) {
        out << "  " << render({rt.mono});
        out << "   a =";
        for (long long a : rt.a) out << " " << a;
        out << ", b =";
        for (long long b : rt.b) out << " " << b;
        out << ", lambda = " << rt.lambda << "\n";
    }
    if (fact.lambda_tau)
        out << "lambda(tau) = " << *fact.lambda_tau << "\n";
    else
        out << "lambda(tau) = (no residual)\n";
    return 0;
}

int cmd_certify(const std::string& expr, int samples, std::uint64_t seed, bool as_json,
                std::ostream& out) {
    ReportOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.with_certificate = true;
    AnalysisReport rep = analyze(expr, 2, opts);
    if (as_json) {
        out << emit_report_json(rep);
        return 0;
    }
    const SmoothnessCertificate& cert = *rep.certificate;
    out << "face type: " << to_string(rep.verdict->type) << "\n";
    out << "per cone:\n";
    for (const auto& r : cert.per_cone) {
        out << "  " << std::left << std::setw(22) << matstr(r.tau) << " lambda "
            << std::setw(4) << (r.lambda ? std::to_string(*r.lambda) : "-") << " "
            << std::setw(9) << to_string(r.status);
        if (r.probe.status == ProbeStatus::NONEMPTY && !r.probe.witness.empty()) {
            out << " witness";
            for (const auto& c : r.probe.witness)
                out << " (" << c.real() << ", " << c.imag() << ")";
        }
        out << "\n";
    }
    auto set_str = [](const std::vector<long long>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    out << "L_conservative = " << set_str(cert.L_conservative) << "\n";
    out << "L_optimistic   = " << set_str(cert.L_optimistic) << "\n";
    out << "smoothness class: " << cert.smoothness_class << "\n";
    out << "assumption (*): " << to_string(cert.assumption_star);
    if (cert.star_witness) out << "  at " << *cert.star_witness;
    out << "\n";
    for (const auto& note : cert.notes) out << "note: " << note << "\n";
    return 0;
}

int cmd_nondeg(const std::string& expr, const std::string& weight_text, int samples,
               std::uint64_t seed, std::ostream& out) {
    MixedPolynomial f = parse(expr, 2);
    auto print_report = [&out, &f](const CriticalityReport& rep) {
        out << "weight " << wstr(rep.face_weight)
            << ": f_delta = " << render(face_function(f, rep.face_weight)) << "\n";
        out << "  verdict " << to_string(rep.verdict) << (rep.exact ? " (exact)" : "") << "\n";
        if (rep.violation) {
            out << "  violation at";
            for (const auto& c : *rep.violation)
                out << " (" << c.real() << ", " << c.imag() << ")";
            out << "\n";
        }
        if (!rep.exact)
            out << "  min combined residual " << rep.min_residual << " over " << rep.samples
                << " samples\n";
    };
    if (!weight_text.empty()) {
        WeightVector w(parse_int_list(weight_text, ','));
        print_report(sample_nondegeneracy(f, w, samples, seed));
        return 0;
    }
    NondegReport report = check_nondegeneracy(f, samples, seed);
    for (const auto& row : report.faces) print_report(row);
    out << (report.any_violation ? "degenerate: violation found"
                                 : "no violation found on any weight class")
        << "\n";
    return 0;
}

int cmd_lab(int r, int s, std::ostream& out) {
    FractionalMonomial m{r, s};
    out << "xi(u) = u^" << (r + s) << " / ubar^" << r << ",  |xi(u)| = |u|^" << s << "\n";
    out << "wirtinger derivatives (order a + b):\n";
    for (int order = 1; order <= s + 1; ++order) {
        for (int a = 0; a <= order; ++a) {
            int b = order - a;
            XiDerivative d = wirtinger_orders(m, a, b);
            out << "  d_u^" << a << " d_ub^" << b << " xi = " << d.coefficient << " * u^"
                << d.u_exp << " * ubar^" << d.ubar_exp << "\n";
        }
    }
    ClassProbe probe = class_probe(m, {});
    out << "numeric class estimate at 0: C^" << probe.estimated_class
        << (probe.saturated ? " (or better)" : "") << "\n";
    out << "expected: C^" << (s - 1) << "\n";
    return 0;
}

int cmd_plot(const std::string& expr, const std::string& path, std::ostream& out) {
    MixedPolynomial f = parse(expr, 2);
    std::string svg = emit_svg(f);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + path);
    file << svg;
    out << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mixed polynomial toolkit: newton polyhedra, toric charts, "
                 "smoothness certificates"};
    app.name("mixres");
    app.require_subcommand(1);

    std::string expr, cone_text, weight_text, out_path, lab_mode;
    int n = 2, k = -1, samples_certify = 256, samples_nondeg = 512, lab_r = 1, lab_s = 1;
    std::uint64_t seed = 0;
    bool json_analyze = false, json_certify = false;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full pipeline report");
    analyze_cmd->add_option("expr", expr, "mixed polynomial expression")->required();
    analyze_cmd->add_option("--n", n, "number of variables");
    analyze_cmd->add_flag("--json", json_analyze, "machine-readable output");

    CLI::App* subdivide_cmd =
        app.add_subcommand("subdivide", "canonical admissible regular subdivision");
    subdivide_cmd->add_option("expr", expr, "mixed polynomial expression")->required();

    CLI::App* pullback_cmd = app.add_subcommand("pullback", "toric chart pull-back");
    pullback_cmd->add_option("expr", expr, "mixed polynomial expression")->required();
    pullback_cmd->add_option("--cone", cone_text, "cone matrix \"a,b;c,d\" (columns = vertices)")
        ->required();
    pullback_cmd->add_option("--k", k, "leading vertices forming tau (default: all strict)");

    CLI::App* certify_cmd = app.add_subcommand("certify", "strict transform smoothness");
    certify_cmd->add_option("expr", expr, "mixed polynomial expression")->required();
    certify_cmd->add_option("--samples", samples_certify, "probe starts per chart");
    certify_cmd->add_option("--seed", seed, "probe seed");
    certify_cmd->add_flag("--json", json_certify, "machine-readable output");

    CLI::App* nondeg_cmd = app.add_subcommand("nondeg", "face non-degeneracy probes");
    nondeg_cmd->add_option("expr", expr, "mixed polynomial expression")->required();
    nondeg_cmd->add_option("--weight", weight_text, "single weight \"p,q\"");
    nondeg_cmd->add_option("--samples", samples_nondeg, "search starts");
    nondeg_cmd->add_option("--seed", seed, "search seed");

    CLI::App* lab_cmd = app.add_subcommand("lab", "model factor laboratory");
    lab_cmd->add_option("mode", lab_mode, "what to study (only: fraction)")->required();
    lab_cmd->add_option("--r", lab_r, "denominator exponent")->required();
    lab_cmd->add_option("--s", lab_s, "modulus growth exponent")->required();

    CLI::App* plot_cmd = app.add_subcommand("plot", "staircase and fan SVG");
    plot_cmd->add_option("expr", expr, "mixed polynomial expression")->required();
    plot_cmd->add_option("--out", out_path, "output path (.svg)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (const char* env_seed = std::getenv("MIXRES_SEED")) {
        char* end = nullptr;
        seed = std::strtoull(env_seed, &end, 10);
    }

    try {
        if (*analyze_cmd) return cmd_analyze(expr, n, json_analyze, out);
        if (*subdivide_cmd) return cmd_subdivide(expr, out);
        if (*pullback_cmd) return cmd_pullback(expr, cone_text, k, out);
        if (*certify_cmd) return cmd_certify(expr, samples_certify, seed, json_certify, out);
        if (*nondeg_cmd) return cmd_nondeg(expr, weight_text, samples_nondeg, seed, out);
        if (*lab_cmd) {
            if (lab_mode != "fraction") {
                err << "usage error: unknown lab mode '" << lab_mode << "'\n";
                return 2;
            }
            return cmd_lab(lab_r, lab_s, out);
        }
        if (*plot_cmd) return cmd_plot(expr, out_path, out);
    } catch (const SyntaxError& e) {
        err << "error [" << e.concept_name() << "]: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        err << "error [" << e.concept_name() << "]: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error [" << e.concept_name() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace mixres
