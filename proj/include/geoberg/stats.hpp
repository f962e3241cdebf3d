#pragma once

#include <vector>

#include "geoberg/geodesic.hpp"
#include "geoberg/spectral.hpp"

namespace geoberg {

/** Law of the spectral random variable at (t,x): takes value lambda_j with
    probability proportional to e^{2 lambda_j t} |shat_j|^2 in the starting
    gauge. Its mean and variance drive the path's velocity and acceleration,
    which is the moment consistency the checks below exploit. */
struct SpectralDistribution {
    int k = 0;
    double t = 0.0, x = 0.0;
    std::vector<double> lambda;   // sorted descending, aligned with prob
    std::vector<double> prob;
    double mean = 0.0;
    double variance = 0.0;
};

SpectralDistribution spectral_distribution(const BergmanGeodesic& bg, double t, double x);

/** Acceleration cross-checks at one point of one path. */
struct VariancePoint {
    double t = 0.0, x = 0.0;
    double accel = 0.0;            // analytic second time derivative
    double var_route = 0.0;        // (4/k) Var from the distribution route
    double identity_gap = 0.0;     // relative gap between the two
    double fd_accel = 0.0;         // centered second difference in t
    double fd_gap = 0.0;           // gap vs fd over the grid accel scale
    bool fd_checked = false;
};

/** Acceleration = (4/k) Var(Z) identity on a scan grid, corroborated by
    plain second differences of the path values. FD comparisons only run
    where |accel| clears a floor relative to its grid sup; below that the
    difference quotient is all cancellation noise and certifies nothing. */
struct VarianceReport {
    std::vector<VariancePoint> points;
    double max_identity_gap = 0.0;
    double max_fd_gap = 0.0;
    double sup_accel = 0.0;        // over the scan grid
    double min_accel = 0.0;
};

// The default step balances the h^2 truncation of the centered second
// difference against its 4 eps |value| / h^2 rounding floor for values of
// order one; both sit near 5e-8 of the acceleration scale at 5e-4.
VarianceReport variance_check(const BergmanGeodesic& bg,
                              std::size_t t_nodes = 9, std::size_t x_nodes = 33,
                              double x_max = 40.0, double fd_step = 5e-4);

/** Largest and smallest adjacent gap of the sorted spectrum. */
struct SpacingReport {
    double max_gap = 0.0;
    double min_gap = 0.0;
};

SpacingReport spacing_check(const SpectralPair& sp);

/** Energy inequalities for one potential against the round background:
    grad_norm_sq = int (phi')^2 dx <= 2 sup|phi| (integration by parts plus
    total volume 1), and the n = 1 energy functional j_functional =
    (1/2) grad_norm_sq <= 2 sup|phi|. Composite Simpson on a uniform grid;
    x_nodes must be odd. */
struct SobolevReport {
    double grad_norm_sq = 0.0;
    double c0_norm = 0.0;
    double j_functional = 0.0;
    bool grad_ok = true;
    bool j_ok = true;
};

SobolevReport sobolev_bound_check(const RadialPotential& phi,
                                  std::size_t x_nodes = 8001, double x_max = 40.0);

/** Boundary behavior of one level-k path: how fast it moves along and off
    the endpoint rows, and how well it matches the prescribed data there. */
struct BoundaryModulusRow {
    int k = 0;
    double tangential = 0.0;         // sup |d_x phi| on the two endpoint rows
    double transversal = 0.0;        // sup |d_t phi| on rows within t_edge of the ends
    double transversal_bound = 0.0;  // 2 max|lambda| / k, the exact ceiling
    double err0 = 0.0;               // sup |phi(0;k)|
    double err1 = 0.0;               // sup |phi(1;k) - (phi1 - phi0)|
    double k2_err = 0.0;             // k^2 * max(err0, err1)
};

struct BoundaryModulusReport {
    std::vector<BoundaryModulusRow> rows;
    double sup_k2_err = 0.0;
    bool transversal_within_bound = true;
};

BoundaryModulusReport boundary_modulus_report(const std::vector<const BergmanGeodesic*>& family,
                                              std::size_t x_nodes = 201, double x_max = 40.0,
                                              double t_edge = 1.0 / 64.0);

} // namespace geoberg
