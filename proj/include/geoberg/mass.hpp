#pragma once

#include <vector>

#include "geoberg/geodesic.hpp"
#include "geoberg/pathgrid.hpp"
#include "geoberg/quadrature.hpp"

namespace geoberg {

/** Monge-Ampere density D(t,x) = psi_tt psi_xx - psi_tx^2 at one grid node,
    the (t,x) Hessian determinant of the fiber potential. The rotation
    reduction fixes the angular factor to exactly 1 in these coordinates;
    with that normalization the bulk integral of D and the boundary formula
    below measure the same mass. Analytic derivative tables are used when
    the path carries them, otherwise centered differences on the values
    (fourth order in t away from the first and last two rows). */
double ma_density(const PathGrid& g, std::size_t it, std::size_t ix);

/** Trapezoid integral of D over the whole (t,x) window. */
double ma_mass_bulk(const PathGrid& g);

/** Boundary form of the same mass: int phidot(1) dp_1 - int phidot(0) dp_0,
    each integral taken in that endpoint's own moment variable by the given
    quadrature; no (t,x) grid is involved. Together with ma_mass_bulk this
    gives two independent routes to one number. */
double ma_mass_boundary(const BergmanGeodesic& bg, const QuadratureRule& quad);

/** Derivative of the energy functional along the path at time t:
    int phidot(t) dp_t in the time-t moment variable. Nondecreasing in t
    whenever the path's density is pointwise nonnegative. */
double energy_derivative(const BergmanGeodesic& bg, double t, const QuadratureRule& quad);

/** Riemannian path energy int_0^1 int phidot^2 psi'' dx dt by trapezoid
    quadrature on the grid. Geodesics minimize this among paths with the
    same endpoints, which is the oracle-vs-linear comparison test. */
double path_energy(const PathGrid& g);

struct MassDecayRow {
    int k = 0;
    double boundary_mass = 0.0;
    double k_times_mass = 0.0;
};

/** Boundary masses over a level sweep with the fitted log-log slope and
    sup_k (k * mass). The slope is the measured decay exponent; the sup is
    the constant in the mass <= C/k bound. */
struct MassDecayStudy {
    std::vector<MassDecayRow> rows;
    double slope = 0.0;         // d log(mass) / d log(k), least squares
    double sup_k_mass = 0.0;
    double max_over_min_k_mass = 0.0;
};

MassDecayStudy ma_mass_decay_study(const RadialPotential& phi0, const RadialPotential& phi1,
                                   const std::vector<int>& k_list,
                                   std::size_t quad_extra = 16);

/** Certificate that a path solves the Dirichlet problem: boundary rows
    against the prescribed endpoint data, convexity of the (t,x) Hessian,
    and the interior density sup. When the second time derivative comes
    from values rather than an analytic table, hessian and density are
    evaluated on rows [2, nt-3] where the high-order stencil exists. */
struct DirichletReport {
    double boundary_mismatch = 0.0;   // sup over both endpoint rows
    double hessian_min = 0.0;         // smallest eigenvalue of [[psi_tt, psi_tx], [psi_tx, psi_xx]]
    double density_sup = 0.0;         // sup |D| over the interior
};

DirichletReport dirichlet_residual_report(const PathGrid& g);

} // namespace geoberg
