#pragma once

#include <vector>

#include "geoberg/legendre.hpp"
#include "geoberg/pathgrid.hpp"
#include "geoberg/potentials.hpp"

namespace geoberg {

/** The exact geodesic between two metrics, with its own certificate data.
    Construction: symplectic potentials u0, u1 of the endpoints, linear
    interpolation u_t = u0 + t (u1 - u0), dual transform back per (t,x).
    Linearity in u is what makes the path solve the degenerate
    Monge-Ampere equation; the residual check below is the proof carried
    by the artifact rather than taken on faith. */
struct GeodesicPath {
    PathGrid grid;                  // psi values plus analytic d_t, d_tx, d_xx
    double endpoint_err0 = 0.0;     // sup |psi(0,x) - psi0(x)|
    double endpoint_err1 = 0.0;
    double roundtrip_err = 0.0;     // sup over both endpoint rows of the dual round trip
};

/** Sample the Legendre-linear geodesic on a uniform (t,x) grid.
    The d_tt table is left empty on purpose: the construction makes
    psi_tt = (psi_tx)^2 / psi_xx automatic for its own analytic jets, so a
    residual computed from analytic second time derivatives would certify
    nothing. Consumers differentiate the stored values in t instead. */
GeodesicPath exact_geodesic(const RadialPotential& phi0, const RadialPotential& phi1,
                            std::size_t t_nodes, std::size_t x_nodes, double x_max,
                            const std::vector<double>& p_knots = default_p_knots());

/** Certification number: sup over the interior rows [2, nt-3] of
    |psi_tt - (psi_tx)^2 / psi_xx|, with psi_tt taken from the sampled
    values by the fourth-order five-point stencil and the first-order
    quantities from the analytic tables. Zero exactly at geodesics, so
    what remains measures construction error plus stencil noise. */
double geodesic_equation_residual(const PathGrid& g);

} // namespace geoberg
