// One-variable laboratory for the model factor xi(u) = u^{r+s} / ubar^r,
// extended by 0 at the origin.  |xi(u)| = |u|^s, and xi is exactly of class
// C^{s-1} there; the numeric probe recovers that class from decay rates of
// the mixed derivatives.
#pragma once

#include <complex>
#include <vector>

namespace mixres {

struct FractionalMonomial {
    int r = 1;  // denominator exponent, r >= 1
    int s = 1;  // modulus growth |xi(u)| = |u|^s, s >= 1
};

// Value of xi at u; the origin maps to 0.
std::complex<double> xi_eval(const FractionalMonomial& m, std::complex<double> u);

// Polar form: xi(rho e^{i theta}) = rho^s e^{i (2r+s) theta}, split into its
// real and imaginary parts.  Cross-checks xi_eval away from the origin.
std::complex<double> xi_polar(const FractionalMonomial& m, double rho, double theta);

// d^a/du^a d^b/dubar^b xi: coefficient fall(r+s, a) * fall(-r, b) on
// u^{r+s-a} ubar^{-r-b}, where fall(x, k) = x (x-1) ... (x-k+1).
struct XiDerivative {
    long long coefficient = 0;
    int u_exp = 0;
    int ubar_exp = 0;
};

long long falling_factorial(long long x, int k);

XiDerivative wirtinger_orders(const FractionalMonomial& m, int a, int b);

// Value of the derivative at u != 0; throws DomainError at the puncture when
// a negative exponent makes the expression singular there.
std::complex<double> evaluate(const XiDerivative& d, std::complex<double> u);

struct ClassProbeOptions {
    int max_order = 6;
    int rays = 8;             // sample directions per radius
    double radius_hi = 1e-2;  // largest sampling radius
    double radius_lo = 1e-6;  // smallest sampling radius
    int radii = 5;            // geometric steps from hi to lo
    double threshold = 1e-4;  // absolute smallness counted as vanishing
};

struct OrderSample {
    int order = 0;
    double max_hi = 0.0;  // largest derivative modulus at radius_hi
    double max_lo = 0.0;  // largest derivative modulus at radius_lo
    bool vanishes = false;
};

struct ClassProbe {
    std::vector<OrderSample> orders;
    int estimated_class = 0;  // orders 1..estimated_class vanish at the origin
    bool saturated = false;   // every probed order vanished: a lower bound only
};

// Estimates the continuity class at the origin: an order vanishes when its
// derivatives either fall below threshold or decay by two orders of magnitude
// from radius_hi to radius_lo.
ClassProbe class_probe(const FractionalMonomial& m, const ClassProbeOptions& options);

}  // namespace mixres
