#include "mixres/lab.hpp"

#include <cmath>

#include "mixres/errors.hpp"

namespace mixres {

namespace {

void validate(const FractionalMonomial& m) {
    if (m.r < 1 || m.s < 1) throw DomainError("fractional monomial requires r >= 1 and s >= 1");
}

std::complex<double> signed_pow(std::complex<double> base, int e) {
    if (e < 0) return 1.0 / signed_pow(base, -e);
    std::complex<double> acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace

std::complex<double> xi_eval(const FractionalMonomial& m, std::complex<double> u) {
    validate(m);
    if (u == std::complex<double>(0.0, 0.0)) return 0.0;
    return signed_pow(u, m.r + m.s) * signed_pow(std::conj(u), -m.r);
}

std::complex<double> xi_polar(const FractionalMonomial& m, double rho, double theta) {
    validate(m);
    return std::polar(std::pow(rho, m.s), (2 * m.r + m.s) * theta);
}

long long falling_factorial(long long x, int k) {
    long long acc = 1;
    for (int i = 0; i < k; ++i) acc *= x - i;
    return acc;
}

XiDerivative wirtinger_orders(const FractionalMonomial& m, int a, int b) {
    validate(m);
    if (a < 0 || b < 0) throw DomainError("derivative orders must be nonnegative");
    XiDerivative d;
    d.coefficient = falling_factorial(m.r + m.s, a) * falling_factorial(-m.r, b);
    d.u_exp = m.r + m.s - a;
    d.ubar_exp = -m.r - b;
    return d;
}

std::complex<double> evaluate(const XiDerivative& d, std::complex<double> u) {
    if (d.coefficient == 0) return 0.0;
    if (u == std::complex<double>(0.0, 0.0)) {
        if (d.u_exp + d.ubar_exp > 0 && d.ubar_exp >= 0) return 0.0;
        throw DomainError("derivative of a fractional monomial is singular at the origin");
    }
    return static_cast<double>(d.coefficient) * signed_pow(u, d.u_exp) *
           signed_pow(std::conj(u), d.ubar_exp);
}

ClassProbe class_probe(const FractionalMonomial& m, const ClassProbeOptions& options) {
    validate(m);
    ClassProbe probe;
    probe.saturated = true;
    const double offset = 0.37;  // keeps rays off the axes and symmetry lines
    for (int order = 1; order <= options.max_order; ++order) {
        OrderSample sample;
        sample.order = order;
        sample.vanishes = true;
        for (int a = 0; a <= order; ++a) {
            int b = order - a;
            XiDerivative d = wirtinger_orders(m, a, b);
            if (d.coefficient == 0) continue;
            double max_hi = 0.0, max_lo = 0.0;
            double ratio = std::pow(options.radius_lo / options.radius_hi,
                                    1.0 / std::max(1, options.radii - 1));
            for (int step = 0; step < options.radii; ++step) {
                double rho = options.radius_hi * std::pow(ratio, step);
                double max_here = 0.0;
                for (int ray = 0; ray < options.rays; ++ray) {
                    double theta = offset + 2.0 * 3.14159265358979323846 * ray / options.rays;
                    double value = std::abs(evaluate(d, std::polar(rho, theta)));
                    max_here = std::max(max_here, value);
                }
                if (step == 0) max_hi = max_here;
                if (step == options.radii - 1) max_lo = max_here;
            }
            sample.max_hi = std::max(sample.max_hi, max_hi);
            sample.max_lo = std::max(sample.max_lo, max_lo);
            bool decayed = max_lo < options.threshold || max_lo < max_hi * 1e-2;
            if (!decayed) sample.vanishes = false;
        }
        probe.orders.push_back(sample);
        if (!sample.vanishes) {
            probe.estimated_class = order - 1;
            probe.saturated = false;
            break;
        }
        probe.estimated_class = order;
    }
    return probe;
}

}  // namespace mixres
