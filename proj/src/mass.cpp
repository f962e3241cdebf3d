#include "geoberg/mass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoberg/errors.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

namespace {

double density_at(const PathGrid& g, std::size_t it, std::size_t ix) {
    const double c = psi_dxx_at(g, it, ix);
    if (!(c > 0.0))
        throw DegenerateMetric("psi'' <= 0 at a grid node; the path left the space of metrics");
    const double a = psi_dtt_at(g, it, ix);
    const double b = psi_dtx_at(g, it, ix);
    return a * c - b * b;
}

double trapezoid_weight(std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

/** x at which the time-t metric's moment map hits q. */
double solve_moment(const BergmanGeodesic& bg, double t, double q) {
    // psi'(t, x) sweeps (0,1) monotonically; +-746 pins both tails to the
    // last representable doubles on either side of q.
    return solve_increasing(
        [&](double x) { return bg.jet(t, x).psi_dx - q; },
        [&](double x) { return bg.jet(t, x).psi_dxx; },
        -746.0, 746.0);
}

} // namespace

double ma_density(const PathGrid& g, std::size_t it, std::size_t ix) {
    return density_at(g, it, ix);
}

double ma_mass_bulk(const PathGrid& g) {
    const std::size_t nt = g.t_nodes.size(), nx = g.x_nodes.size();
    double total = 0.0;
    for (std::size_t it = 0; it < nt; ++it) {
        const double wt = trapezoid_weight(it, nt);
        double row = 0.0;
        for (std::size_t ix = 0; ix < nx; ++ix)
            row += trapezoid_weight(ix, nx) * density_at(g, it, ix);
        total += wt * row;
    }
    return total * g.dt() * g.dx();
}

double ma_mass_boundary(const BergmanGeodesic& bg, const QuadratureRule& quad) {
    double end1 = 0.0, end0 = 0.0;
    for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
        const double q = quad.nodes[i], w = quad.weights[i];
        end1 += w * bg.jet(1.0, solve_moment(bg, 1.0, q)).dt;
        end0 += w * bg.jet(0.0, solve_moment(bg, 0.0, q)).dt;
    }
    return end1 - end0;
}

double energy_derivative(const BergmanGeodesic& bg, double t, const QuadratureRule& quad) {
    double total = 0.0;
    for (std::size_t i = 0; i < quad.nodes.size(); ++i)
        total += quad.weights[i] * bg.jet(t, solve_moment(bg, t, quad.nodes[i])).dt;
    return total;
}

double path_energy(const PathGrid& g) {
    const std::size_t nt = g.t_nodes.size(), nx = g.x_nodes.size();
    double total = 0.0;
    for (std::size_t it = 0; it < nt; ++it) {
        const double wt = trapezoid_weight(it, nt);
        double row = 0.0;
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double v = psi_dt_at(g, it, ix);
            row += trapezoid_weight(ix, nx) * v * v * psi_dxx_at(g, it, ix);
        }
        total += wt * row;
    }
    return total * g.dt() * g.dx();
}

MassDecayStudy ma_mass_decay_study(const RadialPotential& phi0, const RadialPotential& phi1,
                                   const std::vector<int>& k_list, std::size_t quad_extra) {
    MassDecayStudy study;
    std::vector<double> ks, masses;
    double km_max = 0.0, km_min = std::numeric_limits<double>::infinity();
    for (int k : k_list) {
        const QuadratureRule quad = build_quadrature(static_cast<std::size_t>(k) + quad_extra);
        const BergmanGeodesic bg(phi0, phi1, k, quad);
        MassDecayRow row;
        row.k = k;
        row.boundary_mass = ma_mass_boundary(bg, quad);
        row.k_times_mass = static_cast<double>(k) * row.boundary_mass;
        km_max = std::max(km_max, row.k_times_mass);
        km_min = std::min(km_min, row.k_times_mass);
        study.rows.push_back(row);
        ks.push_back(static_cast<double>(k));
        masses.push_back(row.boundary_mass);
    }
    study.sup_k_mass = km_max;
    // Slope and spread are meaningful only when the masses are genuinely
    // positive; an exact-geodesic pair sits at roundoff scale instead.
    const bool positive = std::all_of(masses.begin(), masses.end(),
                                      [](double m) { return m > 1e-14; });
    study.slope = positive ? loglog_slope(ks, masses)
                           : std::numeric_limits<double>::quiet_NaN();
    if (km_min > 0.0)
        study.max_over_min_k_mass = km_max / km_min;
    else
        study.max_over_min_k_mass = (std::abs(km_max) <= 1e-12)
            ? 1.0 : std::numeric_limits<double>::infinity();
    return study;
}

DirichletReport dirichlet_residual_report(const PathGrid& g) {
    if (!g.phi0.phi || !g.phi1.phi)
        throw GridMismatch("path carries no endpoint data to certify against");
    const std::size_t nt = g.t_nodes.size(), nx = g.x_nodes.size();

    DirichletReport rep;
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = g.x_nodes[ix];
        const double e0 = std::abs(g.psi.at(0, ix) - (softplus(x) + g.phi0(x)));
        const double e1 = std::abs(g.psi.at(nt - 1, ix) - (softplus(x) + g.phi1(x)));
        rep.boundary_mismatch = std::max({rep.boundary_mismatch, e0, e1});
    }

    // Without an analytic psi_tt table the scan stays on the rows where the
    // fourth-order value stencil exists.
    const bool analytic_tt = !g.d_tt.empty();
    const std::size_t it_lo = analytic_tt ? 0 : 2;
    const std::size_t it_hi = analytic_tt ? nt : nt - 2;
    if (it_hi <= it_lo) throw GridMismatch("too few time rows for an interior scan");

    rep.hessian_min = std::numeric_limits<double>::infinity();
    for (std::size_t it = it_lo; it < it_hi; ++it) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double c = psi_dxx_at(g, it, ix);
            if (!(c > 0.0))
                throw DegenerateMetric("psi'' <= 0 inside the certification window");
            const double a = psi_dtt_at(g, it, ix);
            const double b = psi_dtx_at(g, it, ix);
            const double mid = 0.5 * (a + c);
            const double rad = std::hypot(0.5 * (a - c), b);
            rep.hessian_min = std::min(rep.hessian_min, mid - rad);
            rep.density_sup = std::max(rep.density_sup, std::abs(a * c - b * b));
        }
    }
    return rep;
}

} // namespace geoberg
