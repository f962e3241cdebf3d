#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geoberg/util.hpp"

namespace geoberg {

/** Rotation-invariant relative potential phi(x), x = log|z|^2, describing a
    hermitian metric h = h_FS * exp(-phi) on the degree-one line bundle.
    phi is bounded with finite limits at x -> -inf / +inf and carries two
    analytic derivatives. Validity (strict convexity of the full fiber
    potential) is checked by the factory functions, not by this struct. */
struct RadialPotential {
    std::string family;                    // "fs", "dilation", "bump"
    std::vector<double> params;
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    std::function<double(double)> ddphi;
    double limit_lo = 0.0;                 // phi(-inf)
    double limit_hi = 0.0;                 // phi(+inf)

    double operator()(double x) const { return phi(x); }
};

/** Full fiber potential psi(x) = log(1 + e^x) + phi(x) of a metric.
    Strict convexity of psi is what positive curvature means here; the
    moment map p = psi'(x) is then an increasing bijection onto (0,1). */
class FiberPotential {
public:
    explicit FiberPotential(RadialPotential rel) : rel_(std::move(rel)) {}

    double psi(double x) const { return softplus(x) + rel_.phi(x); }
    double dpsi(double x) const { return logistic(x) + rel_.dphi(x); }
    double ddpsi(double x) const { return dlogistic(x) + rel_.ddphi(x); }

    /** Moment coordinate of x. */
    double moment(double x) const { return dpsi(x); }

    /** Inverse of the moment map; p must lie strictly inside (0,1). */
    double inverse_moment(double p) const;

    const RadialPotential& relative() const { return rel_; }

private:
    RadialPotential rel_;
};

/** Reference round metric: phi = 0. */
RadialPotential make_fubini_study();

/** Dilation family phi_c(x) = log((1 + e^{x+c}) / (1 + e^x)).
    Its fiber potential is log(1 + e^{x+c}); the family is a group of exact
    geodesic rays, which makes it the main closed-form test target. */
RadialPotential make_dilation_potential(double c);

/** Parametrized test families. Currently one family id is understood:
      "bump": params {a, w, x0}, phi(x) = a * exp(-(x-x0)^2 / (2 w^2)).
    The factory scans the fiber potential's second derivative on a fine grid
    and refuses (PositivityViolation) parameters that leave the space of
    positively curved metrics. */
RadialPotential make_test_potential(const std::string& family_id,
                                    const std::vector<double>& params);

/** Moment map p = psi'(x) of the metric with relative potential phi. */
double moment_map(const FiberPotential& psi, double x);

/** Smallest value of psi'' on a uniform scan of [-x_max, x_max].
    Used by the factories and by validity checks before quadrature. */
double min_convexity(const FiberPotential& psi, double x_max = 40.0,
                     std::size_t scan_nodes = 8001);

/** Throws PositivityViolation when the scan finds psi'' <= floor. */
void require_positive(const FiberPotential& psi, double floor = 0.0);

/** Total volume seen by the truncated computational window: the moment-map
    increment psi'(x_max) - psi'(-x_max). Equals 1 up to moment-map tails
    for every valid potential; the conservation checks assert this. */
double volume_total(const FiberPotential& psi, double x_max = 40.0);

} // namespace geoberg
