#include "geoberg/quadrature.hpp"

#include <cmath>

#include "geoberg/errors.hpp"

namespace geoberg {

namespace {

/** Value and derivative of the Legendre polynomial P_n at x, by the
    three-term recurrence. */
void legendre_pd(std::size_t n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (std::size_t j = 2; j <= n; ++j) {
        const double pj = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = pj;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

QuadratureRule build_quadrature(std::size_t n) {
    if (n < 1)
        throw OutOfDomain("build_quadrature: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Tricomi-style initial guess for the i-th root of P_n on (-1,1)
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pd(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pd(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1,1] -> (0,1); keep symmetric pairs exactly mirrored
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace geoberg
