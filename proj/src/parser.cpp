#include "mixres/parser.hpp"

#include <cctype>

#include "mixres/errors.hpp"

namespace mixres {

namespace {

// Recursive descent over the raw string; positions index the original text.
class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    MixedPolynomial run() {
        MixedPolynomial f = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "'+', '-', '*', '^' or end of input");
        return f;
    }

private:
    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept_char(char c) {
        if (peek_char(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_char(char c, const std::string& what) {
        if (!accept_char(c)) throw SyntaxError(pos_, what);
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    long parse_uint(const std::string& what) {
        skip_ws();
        if (!at_digit()) throw SyntaxError(pos_, what);
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000000L) throw SyntaxError(pos_, "a smaller integer");
            ++pos_;
        }
        return value;
    }

    // Word = maximal run of lowercase letters ('z', 'zb', 'conj', 'i').
    std::string peek_word() {
        skip_ws();
        std::size_t p = pos_;
        std::string w;
        while (p < text_.size() && std::islower(static_cast<unsigned char>(text_[p]))) w += text_[p++];
        return w;
    }

    MixedPolynomial parse_expr() {
        bool negate = accept_char('-');
        MixedPolynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept_char('+'))
                acc = acc + parse_term();
            else if (accept_char('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    MixedPolynomial parse_term() {
        MixedPolynomial acc = parse_factor();
        while (accept_char('*')) acc = acc * parse_factor();
        return acc;
    }

    MixedPolynomial parse_factor() {
        MixedPolynomial base = parse_base();
        if (accept_char('^')) {
            long e = parse_uint("an exponent");
            MixedPolynomial acc = MixedPolynomial::constant(n_, GaussianRational(1));
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    MixedPolynomial parse_number(bool negative) {
        long num = parse_uint("an integer");
        Rational value(num);
        if (accept_char('/')) {
            long den = parse_uint("a denominator");
            if (den == 0) throw SyntaxError(pos_, "a nonzero denominator");
            value = Rational(num, den);
            value.canonicalize();
        }
        if (negative) value = -value;
        GaussianRational c(value, Rational(0));
        std::string w = peek_word();
        if (w == "i") {
            pos_ += 1;
            c = GaussianRational(Rational(0), value);
        }
        return MixedPolynomial::constant(n_, c);
    }

    MixedPolynomial variable(int index, bool conjugated) {
        if (index < 1 || index > n_) throw IndexOutOfRange(index, n_);
        ExponentPair e{std::vector<int>(n_, 0), std::vector<int>(n_, 0)};
        if (conjugated)
            e.mu[index - 1] = 1;
        else
            e.nu[index - 1] = 1;
        return MixedPolynomial::monomial(n_, GaussianRational(1), e);
    }

    MixedPolynomial parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "a factor");

        if (accept_char('(')) {
            MixedPolynomial inner = parse_expr();
            expect_char(')', "')'");
            return inner;
        }
        if (text_[pos_] == '-') {
            // Unary sign on a numeric literal, valid only where a factor is expected.
            std::size_t save = pos_;
            ++pos_;
            if (at_digit()) return parse_number(true);
            pos_ = save;
            throw SyntaxError(pos_ + 1, "an integer after '-'");
        }
        if (at_digit()) return parse_number(false);

        std::string w = peek_word();
        if (w == "conj") {
            pos_ += 4;
            expect_char('(', "'(' after conj");
            MixedPolynomial inner = parse_expr();
            expect_char(')', "')'");
            return conjugate(inner);
        }
        if (w == "i") {
            pos_ += 1;
            return MixedPolynomial::constant(n_, GaussianRational::unit_i());
        }
        if (w == "zb") {
            pos_ += 2;
            return variable(static_cast<int>(parse_uint("a variable index")), true);
        }
        if (w == "z") {
            pos_ += 1;
            return variable(static_cast<int>(parse_uint("a variable index")), false);
        }
        throw SyntaxError(pos_, "'z', 'zb', 'i', 'conj', a number or '('");
    }
};

}  // namespace

MixedPolynomial parse(const std::string& text, int n) {
    if (n < 1) throw Error("variable count", "n must be at least 1");
    return Parser(text, n).run();
}

}  // namespace mixres
