#pragma once

#include <vector>

#include "geoberg/potentials.hpp"
#include "geoberg/spline.hpp"

namespace geoberg {

/** Symplectic potential u(p) on the moment interval [0,1], stored as the
    bounded correction delta = u - u_fs against the round-metric potential
    u_fs(p) = p log p + (1-p) log(1-p). Storing only delta keeps every
    sampled quantity finite: the p log p singularities live entirely in the
    closed-form u_fs part. */
class SymplecticPotential {
public:
    SymplecticPotential() = default;
    /** delta_values must match p_knots; knots include 0 and 1. */
    SymplecticPotential(std::vector<double> p_knots, std::vector<double> delta_values);

    double u(double p) const;
    double du(double p) const;   // singular at the ends through the u_fs part
    double ddu(double p) const;

    double delta(double p) const { return spline_.eval(p); }
    double ddelta(double p) const { return spline_.deriv(p); }
    double d2delta(double p) const { return spline_.deriv2(p); }

    const std::vector<double>& knots() const { return spline_.knots(); }
    const std::vector<double>& delta_values() const { return spline_.values(); }

    /** Bound on |delta'| over the knots, used to bracket dual root-finds. */
    double slope_bound() const { return slope_bound_; }

    static double u_fs(double p);
    static double du_fs(double p);
    static double ddu_fs(double p);

private:
    CubicSpline spline_;
    double slope_bound_ = 0.0;
};

/** Default moment-grid knots: logistic images of a uniform x-grid, plus the
    exact endpoints. The knots crowd exponentially toward p = 0 and p = 1,
    which is where the dual variable x runs off to infinity; this keeps the
    spline error of delta uniformly small in x. */
std::vector<double> default_p_knots();

/** u(p) = sup_x (p x - psi(x)), sampled on the given knots.
    Interior knots are found by monotone root-finding on psi'(x) = p; the
    endpoint values are the limits -phi(-inf) and -phi(+inf). */
SymplecticPotential legendre_transform(const FiberPotential& psi,
                                       const std::vector<double>& p_knots);

/** psi(x) = sup_p (p x - u(p)), returned as a metric whose callables solve
    the dual problem per evaluation. u must be convex (ConvexityViolation
    otherwise); x_grid is scanned to certify convexity of the result. */
FiberPotential inverse_legendre(const SymplecticPotential& u,
                                const std::vector<double>& x_grid);

/** Maximizer p*(x) of p x - u(p); the moment coordinate of x in the metric
    dual to u. */
double dual_argmax(const SymplecticPotential& u, double x);

/** The same maximizer in the logit coordinate q = log(p/(1-p)), exact for
    every real x. Needed wherever p(1-p) enters a quotient: p*(x) itself
    rounds to 1.0 once x passes about 36, while dlogistic(q) keeps full
    relative precision in the tails. */
double dual_argmax_logit(const SymplecticPotential& u, double x);

} // namespace geoberg
