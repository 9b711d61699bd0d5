#include "mixres/numeric.hpp"

#include <cmath>
#include <cstddef>

namespace mixres {

namespace {

double objective_of(const std::vector<double>& r) {
    double acc = 0.0;
    for (double v : r) acc += v * v;
    return acc;
}

// Solves (A + damping * I) x = b in place; A symmetric positive semidefinite.
std::vector<double> solve_damped(std::vector<std::vector<double>> A, std::vector<double> b,
                                 double damping) {
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < m; ++i) A[i][i] += damping;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[pivot][col])) pivot = r;
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        if (std::fabs(A[col][col]) < 1e-300) continue;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            double factor = A[r][col] / A[col][col];
            for (std::size_t j = col; j < m; ++j) A[r][j] -= factor * A[col][j];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (std::fabs(A[i][i]) >= 1e-300) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace

LeastSquaresResult least_squares(
    const std::function<std::vector<double>(const std::vector<double>&)>& residual,
    std::vector<double> x0, int max_iterations, double success_objective) {
    const std::size_t m = x0.size();
    std::vector<double> r = residual(x0);
    double obj = objective_of(r);
    double damping = 1e-3;

    LeastSquaresResult result{x0, obj, 0};
    for (int iter = 0; iter < max_iterations; ++iter) {
        result.iterations = iter;
        if (obj < success_objective) break;

        const std::size_t q = r.size();
        std::vector<std::vector<double>> J(q, std::vector<double>(m));
        for (std::size_t j = 0; j < m; ++j) {
            double h = 1e-7 * std::max(1.0, std::fabs(x0[j]));
            std::vector<double> xp = x0, xm = x0;
            xp[j] += h;
            xm[j] -= h;
            std::vector<double> rp = residual(xp), rm = residual(xm);
            for (std::size_t i = 0; i < q; ++i) J[i][j] = (rp[i] - rm[i]) / (2 * h);
        }

        std::vector<std::vector<double>> JtJ(m, std::vector<double>(m, 0.0));
        std::vector<double> Jtr(m, 0.0);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t a = 0; a < m; ++a) {
                Jtr[a] += J[i][a] * r[i];
                for (std::size_t b = 0; b < m; ++b) JtJ[a][b] += J[i][a] * J[i][b];
            }

        double grad_norm = 0.0;
        for (double g : Jtr) grad_norm += g * g;
        if (grad_norm < 1e-30) break;

        bool accepted = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            std::vector<double> step = solve_damped(JtJ, Jtr, damping);
            std::vector<double> x1 = x0;
            for (std::size_t j = 0; j < m; ++j) x1[j] -= step[j];
            std::vector<double> r1 = residual(x1);
            double obj1 = objective_of(r1);
            if (obj1 < obj) {
                x0 = std::move(x1);
                r = std::move(r1);
                obj = obj1;
                damping = std::max(damping / 3.0, 1e-12);
                accepted = true;
                break;
            }
            damping *= 4.0;
        }
        result.x = x0;
        result.objective = obj;
        if (!accepted) break;
    }
    result.x = x0;
    result.objective = obj;
    return result;
}

}  // namespace mixres
