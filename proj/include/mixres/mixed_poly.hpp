#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixres/rational.hpp"

namespace mixres {

// Exponent pair (nu, mu) of a term c * z^nu * zbar^mu. Both vectors have
// length n and nonnegative entries.
struct ExponentPair {
    std::vector<int> nu;
    std::vector<int> mu;

    friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
        return a.nu == b.nu && a.mu == b.mu;
    }
    // Lexicographic on the concatenation (nu, mu); fixes the term order.
    friend bool operator<(const ExponentPair& a, const ExponentPair& b) {
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.mu < b.mu;
    }
};

struct MixedTerm {
    GaussianRational coeff;  // nonzero in canonical form
    ExponentPair exps;
};

// f(z, zbar) = sum of terms, kept in canonical form: equal exponent pairs
// merged, zero coefficients dropped, terms sorted. The zero polynomial has an
// empty term list.
class MixedPolynomial {
public:
    explicit MixedPolynomial(int n) : n_(n) {}
    MixedPolynomial(int n, std::vector<MixedTerm> terms);

    int n() const { return n_; }
    const std::vector<MixedTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // f(0) = 0, i.e. no constant term.
    bool is_germ() const;

    MixedPolynomial operator+(const MixedPolynomial& g) const;
    MixedPolynomial operator-(const MixedPolynomial& g) const;
    MixedPolynomial operator*(const MixedPolynomial& g) const;
    MixedPolynomial operator-() const;
    friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    static MixedPolynomial constant(int n, const GaussianRational& c);
    static MixedPolynomial monomial(int n, const GaussianRational& c, const ExponentPair& e);

private:
    int n_;
    std::vector<MixedTerm> terms_;

    friend bool operator==(const MixedTerm& a, const MixedTerm& b);
};

bool operator==(const MixedTerm& a, const MixedTerm& b);

// Canonical text form; parse(render(f), f.n()) == f.
std::string render(const MixedPolynomial& f);

std::complex<double> evaluate(const MixedPolynomial& f, const std::vector<std::complex<double>>& z);

enum class WirtingerKind { dz, dzbar };

// d/dz_j or d/dzbar_j (1-based j): lowers one exponent, multiplies by it.
MixedPolynomial wirtinger(const MixedPolynomial& f, int j, WirtingerKind kind);

// conj(f): c z^nu zbar^mu -> conj(c) z^mu zbar^nu. Involution.
MixedPolynomial conjugate(const MixedPolynomial& f);

// Terms supported on the axes in I only (1-based indices); other variables set to 0.
MixedPolynomial restrict(const MixedPolynomial& f, const std::vector<int>& I);

struct ConvenienceReport {
    bool convenient = false;
    // convenient: one witness term per axis, indexed 0..n-1.
    std::vector<MixedTerm> axis_terms;
    // not convenient: first axis (1-based) with no pure term.
    int missing_axis = 0;
};

// A germ is convenient when every axis carries a term supported on that axis
// alone. Requires a germ (throws NotAGerm otherwise).
ConvenienceReport is_convenient(const MixedPolynomial& f);

}  // namespace mixres
