#include "mixres/mixed_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mixres/errors.hpp"

namespace mixres {

bool operator==(const MixedTerm& a, const MixedTerm& b) {
    return a.coeff == b.coeff && a.exps == b.exps;
}

MixedPolynomial::MixedPolynomial(int n, std::vector<MixedTerm> terms) : n_(n) {
    std::map<ExponentPair, GaussianRational> merged;
    for (auto& t : terms) {
        if (static_cast<int>(t.exps.nu.size()) != n || static_cast<int>(t.exps.mu.size()) != n)
            throw Error("term arity", "exponent vectors must have length n");
        for (int e : t.exps.nu)
            if (e < 0) throw NegativeEntry();
        for (int e : t.exps.mu)
            if (e < 0) throw NegativeEntry();
        merged[t.exps] += t.coeff;
    }
    for (auto& [exps, coeff] : merged)
        if (!coeff.is_zero()) terms_.push_back({coeff, exps});
}

bool MixedPolynomial::is_germ() const {
    for (const auto& t : terms_) {
        bool constant = true;
        for (int i = 0; i < n_; ++i)
            if (t.exps.nu[i] != 0 || t.exps.mu[i] != 0) constant = false;
        if (constant) return false;
    }
    return true;
}

MixedPolynomial MixedPolynomial::operator+(const MixedPolynomial& g) const {
    std::vector<MixedTerm> all = terms_;
    all.insert(all.end(), g.terms_.begin(), g.terms_.end());
    return MixedPolynomial(n_, std::move(all));
}

MixedPolynomial MixedPolynomial::operator-() const {
    std::vector<MixedTerm> all = terms_;
    for (auto& t : all) t.coeff = -t.coeff;
    return MixedPolynomial(n_, std::move(all));
}

MixedPolynomial MixedPolynomial::operator-(const MixedPolynomial& g) const { return *this + (-g); }

MixedPolynomial MixedPolynomial::operator*(const MixedPolynomial& g) const {
    std::vector<MixedTerm> prod;
    prod.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : g.terms_) {
            MixedTerm t;
            t.coeff = a.coeff * b.coeff;
            t.exps.nu.resize(n_);
            t.exps.mu.resize(n_);
            for (int i = 0; i < n_; ++i) {
                t.exps.nu[i] = a.exps.nu[i] + b.exps.nu[i];
                t.exps.mu[i] = a.exps.mu[i] + b.exps.mu[i];
            }
            prod.push_back(std::move(t));
        }
    return MixedPolynomial(n_, std::move(prod));
}

MixedPolynomial MixedPolynomial::constant(int n, const GaussianRational& c) {
    ExponentPair e{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    return MixedPolynomial(n, {MixedTerm{c, e}});
}

MixedPolynomial MixedPolynomial::monomial(int n, const GaussianRational& c, const ExponentPair& e) {
    return MixedPolynomial(n, {MixedTerm{c, e}});
}

namespace {

std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Renders |c| assuming c has exactly one nonzero component.
std::string magnitude_string(const GaussianRational& c) {
    if (c.im == 0) return rational_string(abs(c.re));
    Rational m = abs(c.im);
    if (m == 1) return "i";
    return rational_string(m) + "i";
}

bool needs_parens(const GaussianRational& c) { return c.re != 0 && c.im != 0; }

}  // namespace

std::string to_string(const GaussianRational& c) {
    if (c.is_zero()) return "0";
    if (!needs_parens(c)) {
        std::string s = magnitude_string(c);
        bool neg = (c.im == 0) ? (c.re < 0) : (c.im < 0);
        return neg ? "-" + s : s;
    }
    std::string s = "(";
    s += (c.re < 0 ? "-" : "") + rational_string(abs(c.re));
    s += (c.im < 0 ? " - " : " + ");
    if (abs(c.im) == 1)
        s += "i";
    else
        s += rational_string(abs(c.im)) + "i";
    return s + ")";
}

std::string render(const MixedPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::vector<std::string> factors;
        for (int i = 0; i < f.n(); ++i) {
            if (t.exps.nu[i] > 0) {
                std::string s = "z" + std::to_string(i + 1);
                if (t.exps.nu[i] > 1) s += "^" + std::to_string(t.exps.nu[i]);
                factors.push_back(s);
            }
        }
        for (int i = 0; i < f.n(); ++i) {
            if (t.exps.mu[i] > 0) {
                std::string s = "zb" + std::to_string(i + 1);
                if (t.exps.mu[i] > 1) s += "^" + std::to_string(t.exps.mu[i]);
                factors.push_back(s);
            }
        }

        const GaussianRational& c = t.coeff;
        bool neg = !needs_parens(c) && ((c.im == 0) ? (c.re < 0) : (c.im < 0));
        std::string coeff_str;
        if (needs_parens(c))
            coeff_str = to_string(c);
        else {
            coeff_str = magnitude_string(c);
            if (coeff_str == "1" && !factors.empty()) coeff_str.clear();
        }

        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }

        std::string body = coeff_str;
        for (const auto& fac : factors) {
            if (!body.empty()) body += "*";
            body += fac;
        }
        out += body;
    }
    return out;
}

std::complex<double> evaluate(const MixedPolynomial& f, const std::vector<std::complex<double>>& z) {
    if (static_cast<int>(z.size()) != f.n())
        throw Error("evaluation point arity", "point must have n coordinates");
    std::complex<double> acc = 0.0;
    for (const auto& t : f.terms()) {
        std::complex<double> v = t.coeff.to_complex();
        for (int i = 0; i < f.n(); ++i) {
            for (int k = 0; k < t.exps.nu[i]; ++k) v *= z[i];
            for (int k = 0; k < t.exps.mu[i]; ++k) v *= std::conj(z[i]);
        }
        acc += v;
    }
    return acc;
}

MixedPolynomial wirtinger(const MixedPolynomial& f, int j, WirtingerKind kind) {
    if (j < 1 || j > f.n()) throw IndexOutOfRange(j, f.n());
    std::vector<MixedTerm> out;
    for (const auto& t : f.terms()) {
        int e = (kind == WirtingerKind::dz) ? t.exps.nu[j - 1] : t.exps.mu[j - 1];
        if (e == 0) continue;
        MixedTerm d = t;
        d.coeff = d.coeff * GaussianRational(e);
        if (kind == WirtingerKind::dz)
            d.exps.nu[j - 1] -= 1;
        else
            d.exps.mu[j - 1] -= 1;
        out.push_back(std::move(d));
    }
    return MixedPolynomial(f.n(), std::move(out));
}

MixedPolynomial conjugate(const MixedPolynomial& f) {
    std::vector<MixedTerm> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms())
        out.push_back({t.coeff.conj(), ExponentPair{t.exps.mu, t.exps.nu}});
    return MixedPolynomial(f.n(), std::move(out));
}

MixedPolynomial restrict(const MixedPolynomial& f, const std::vector<int>& I) {
    std::vector<bool> keep(f.n(), false);
    for (int j : I) {
        if (j < 1 || j > f.n()) throw IndexOutOfRange(j, f.n());
        keep[j - 1] = true;
    }
    std::vector<MixedTerm> out;
    for (const auto& t : f.terms()) {
        bool inside = true;
        for (int i = 0; i < f.n(); ++i)
            if (!keep[i] && (t.exps.nu[i] != 0 || t.exps.mu[i] != 0)) inside = false;
        if (inside) out.push_back(t);
    }
    return MixedPolynomial(f.n(), std::move(out));
}

ConvenienceReport is_convenient(const MixedPolynomial& f) {
    if (!f.is_germ()) throw NotAGerm();
    ConvenienceReport report;
    report.axis_terms.reserve(f.n());
    for (int axis = 0; axis < f.n(); ++axis) {
        const MixedTerm* witness = nullptr;
        for (const auto& t : f.terms()) {
            bool pure = true;
            for (int i = 0; i < f.n(); ++i) {
                if (i == axis) continue;
                if (t.exps.nu[i] != 0 || t.exps.mu[i] != 0) pure = false;
            }
            if (pure && (t.exps.nu[axis] + t.exps.mu[axis] > 0)) {
                witness = &t;
                break;
            }
        }
        if (!witness) {
            report.convenient = false;
            report.missing_axis = axis + 1;
            report.axis_terms.clear();
            return report;
        }
        report.axis_terms.push_back(*witness);
    }
    report.convenient = true;
    return report;
}

}  // namespace mixres
