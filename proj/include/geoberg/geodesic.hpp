#pragma once

#include <memory>
#include <vector>

#include "geoberg/potentials.hpp"
#include "geoberg/quadrature.hpp"
#include "geoberg/spectral.hpp"

namespace geoberg {

/** Value and derivatives of the level-k path potential at one point.
    phi is relative to the starting metric; psi is the full fiber potential
    of the time-t metric, so psi_dxx is the curvature density entering every
    volume integral. Time derivatives of psi and phi coincide. */
struct GeodesicJet {
    double phi = 0.0;
    double dt = 0.0;      // velocity
    double dtt = 0.0;     // acceleration, equals (4/k) Var of the spectral weight
    double dx = 0.0;
    double dtx = 0.0;
    double dxx = 0.0;
    double psi = 0.0;
    double psi_dx = 0.0;  // moment coordinate of the time-t metric
    double psi_dxx = 0.0;
};

/** Level-k segment between two metrics: the potential path
      phi(t)(x) = (1/k) log sum_j e^{2 lambda_j t} |shat_j(x)|^2
    through the simultaneously diagonalizing section basis. All derivatives
    are moments of the spectral weight distribution at (t,x), evaluated in
    log arithmetic with centered second moments, so no grid differences are
    involved anywhere. */
class BergmanGeodesic {
public:
    BergmanGeodesic(RadialPotential phi0, RadialPotential phi1, int k,
                    const QuadratureRule& quad);

    int level() const { return k_; }
    const SpectralPair& spectrum() const { return sp_; }
    const RadialPotential& endpoint0() const { return phi0_; }
    const RadialPotential& endpoint1() const { return phi1_; }
    const FiberPotential& base() const { return psi0_; }

    GeodesicJet jet(double t, double x) const;
    double value(double t, double x) const { return jet(t, x).phi; }
    double velocity(double t, double x) const { return jet(t, x).dt; }
    double accel(double t, double x) const { return jet(t, x).dtt; }

    /** Exact bound satisfied by the velocity everywhere: 2 max|lambda| / k. */
    double velocity_bound() const { return 2.0 * sp_.lambda_abs_max() / static_cast<double>(k_); }

    /** Spectral weights P_j(t,x) and their eigenvalues, largest first. */
    void weights(double t, double x, std::vector<double>& probs) const;

private:
    int k_;
    RadialPotential phi0_, phi1_;
    FiberPotential psi0_;
    SpectralPair sp_;
};

/** Size checks on the spectrum against the endpoint separation.
    c_plus = sup(phi1 - phi0) and c_minus = -inf(phi1 - phi0) are reported in
    both sign conventions; for a separated pair the top eigenvalue should
    fall in [c_plus k/2, 3 c_plus k] and the velocity sup obeys the exact
    2 max|lambda|/k bound plus the measured starting offset. */
struct BoundsReport {
    int k = 0;
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double abs_max_over_k = 0.0;
    double c_plus = 0.0;
    double c_minus = 0.0;
    bool interval_ok = true;       // vacuous when c_plus is below tolerance
    double sup_path = 0.0;         // sup |phi(t)| over the scan grid
    double sup_start = 0.0;        // sup |phi(0)|
    bool path_bound_ok = true;     // sup_path <= 2 max|lambda|/k + sup_start + tol
};

BoundsReport lambda_bounds_report(const BergmanGeodesic& bg,
                                  std::size_t t_nodes = 33,
                                  std::size_t x_nodes = 201,
                                  double x_max = 40.0);

} // namespace geoberg
