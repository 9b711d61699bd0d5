#pragma once

#include <functional>
#include <vector>

namespace mixres {

// Damped Gauss-Newton (Levenberg style) for small nonlinear least squares
// problems, with a central-difference Jacobian. Minimizes |residual(x)|^2.
struct LeastSquaresResult {
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
};

LeastSquaresResult least_squares(
    const std::function<std::vector<double>(const std::vector<double>&)>& residual,
    std::vector<double> x0, int max_iterations, double success_objective);

}  // namespace mixres
