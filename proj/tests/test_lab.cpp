#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "mixres/errors.hpp"
#include "mixres/lab.hpp"

using namespace mixres;

namespace {

using C = std::complex<double>;

// Central-difference Wirtinger derivatives of a closed-form field.
template <typename F>
C fd_du(F&& f, C u, double h) {
    C dx = (f(u + C(h, 0)) - f(u - C(h, 0))) / (2.0 * h);
    C dy = (f(u + C(0, h)) - f(u - C(0, h))) / (2.0 * h);
    return 0.5 * (dx - C(0, 1) * dy);
}

template <typename F>
C fd_dubar(F&& f, C u, double h) {
    C dx = (f(u + C(h, 0)) - f(u - C(h, 0))) / (2.0 * h);
    C dy = (f(u + C(0, h)) - f(u - C(0, h))) / (2.0 * h);
    return 0.5 * (dx + C(0, 1) * dy);
}

}  // namespace

TEST_SUITE("lab") {

TEST_CASE("fractional monomial values") {
    FractionalMonomial m{2, 3};
    CHECK(std::abs(xi_eval(m, 2.0) - C(8.0, 0.0)) < 1e-12);
    CHECK(std::abs(xi_eval(m, C(0.0, 0.0))) == 0.0);

    // |xi(u)| = |u|^s.
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mod(0.2, 2.5);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int trial = 0; trial < 50; ++trial) {
        double rho = mod(rng);
        double theta = ang(rng);
        C u = std::polar(rho, theta);
        FractionalMonomial mm{1 + trial % 3, 1 + trial % 4};
        C v = xi_eval(mm, u);
        CHECK(std::abs(v) == doctest::Approx(std::pow(rho, mm.s)).epsilon(1e-12));
        // Polar form: modulus rho^s, argument (2r+s) theta.
        C p = xi_polar(mm, rho, theta);
        CHECK(std::abs(v - p) < 1e-12 * (1.0 + std::abs(v)));
    }

    CHECK_THROWS_AS(xi_eval(FractionalMonomial{0, 1}, 1.0), DomainError);
    CHECK_THROWS_AS(xi_eval(FractionalMonomial{1, 0}, 1.0), DomainError);
}

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 1) == 5);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(-2, 3) == -24);
    CHECK(falling_factorial(-1, 1) == -1);
    CHECK(falling_factorial(0, 2) == 0);
}

TEST_CASE("mixed derivatives in closed form") {
    // xi = u^3 / ubar for r = 1, s = 2.
    FractionalMonomial m{1, 2};
    XiDerivative du = wirtinger_orders(m, 1, 0);
    CHECK(du.coefficient == 3);
    CHECK(du.u_exp == 2);
    CHECK(du.ubar_exp == -1);
    CHECK(std::abs(evaluate(du, 1.0) - C(3.0, 0.0)) < 1e-14);

    XiDerivative dub = wirtinger_orders(m, 0, 1);
    CHECK(dub.coefficient == -1);
    CHECK(dub.u_exp == 3);
    CHECK(dub.ubar_exp == -2);
    CHECK(std::abs(evaluate(dub, 1.0) - C(-1.0, 0.0)) < 1e-14);

    // Zeroth order reproduces the function itself.
    XiDerivative id = wirtinger_orders(m, 0, 0);
    CHECK(id.coefficient == 1);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> mod(0.3, 1.8);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int trial = 0; trial < 20; ++trial) {
        C u = std::polar(mod(rng), ang(rng));
        CHECK(std::abs(evaluate(id, u) - xi_eval(m, u)) < 1e-12 * (1.0 + std::abs(xi_eval(m, u))));
    }

    // Orders past the holomorphic exponent kill the term.
    XiDerivative dead = wirtinger_orders(m, 4, 0);
    CHECK(dead.coefficient == 0);
    CHECK(std::abs(evaluate(dead, C(0.0, 0.0))) == 0.0);

    CHECK_THROWS_AS(wirtinger_orders(m, -1, 0), DomainError);
}

TEST_CASE("derivative ladder agrees with finite differences") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mod(0.7, 1.4);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    const double h = 1e-6;
    std::vector<FractionalMonomial> ms = {{1, 1}, {1, 2}, {2, 3}};
    for (const auto& m : ms) {
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                XiDerivative cur = wirtinger_orders(m, a, b);
                XiDerivative next_u = wirtinger_orders(m, a + 1, b);
                XiDerivative next_ub = wirtinger_orders(m, a, b + 1);
                auto value = [&](C u) { return evaluate(cur, u); };
                for (int pt = 0; pt < 3; ++pt) {
                    C u = std::polar(mod(rng), ang(rng));
                    C exact_u = evaluate(next_u, u);
                    C exact_ub = evaluate(next_ub, u);
                    CHECK(std::abs(fd_du(value, u, h) - exact_u) <=
                          1e-5 * (1.0 + std::abs(exact_u)));
                    CHECK(std::abs(fd_dubar(value, u, h) - exact_ub) <=
                          1e-5 * (1.0 + std::abs(exact_ub)));
                }
            }
    }
}

TEST_CASE("derivatives are singular at the puncture") {
    FractionalMonomial m{1, 2};
    CHECK_THROWS_AS(evaluate(wirtinger_orders(m, 0, 0), C(0.0, 0.0)), DomainError);
    CHECK_THROWS_AS(evaluate(wirtinger_orders(m, 1, 1), C(0.0, 0.0)), DomainError);
}

TEST_CASE("class probe recovers the continuity class") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}}) {
        CAPTURE(r);
        CAPTURE(s);
        ClassProbe probe = class_probe(FractionalMonomial{r, s}, ClassProbeOptions{});
        CHECK(probe.estimated_class == s - 1);
        CHECK(!probe.saturated);
        // The probe stops at the first order whose derivatives survive.
        REQUIRE(probe.orders.size() == static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            CHECK(probe.orders[i].order == i + 1);
            CHECK(probe.orders[i].vanishes == (i + 1 < s));
        }
        CHECK(probe.orders.back().max_lo > 1.0e-4);
    }

    // Monotone in the modulus exponent.
    int prev = -1;
    for (int s = 1; s <= 5; ++s) {
        ClassProbe probe = class_probe(FractionalMonomial{1, s}, ClassProbeOptions{});
        CHECK(probe.estimated_class > prev);
        prev = probe.estimated_class;
    }

    // Beyond the probed range the estimate is only a lower bound.
    ClassProbeOptions opt;
    ClassProbe deep = class_probe(FractionalMonomial{1, 8}, opt);
    CHECK(deep.saturated);
    CHECK(deep.estimated_class == opt.max_order);
    REQUIRE(deep.orders.size() == static_cast<std::size_t>(opt.max_order));
    for (const auto& o : deep.orders) CHECK(o.vanishes);
}

}
