#pragma once

#include <string>
#include <vector>

#include "geoberg/geodesic.hpp"
#include "geoberg/potentials.hpp"

namespace geoberg {

/** Row-major (t, x) table. */
struct Grid2D {
    std::size_t nt = 0, nx = 0;
    std::vector<double> a;

    Grid2D() = default;
    Grid2D(std::size_t t, std::size_t x) : nt(t), nx(x), a(t * x, 0.0) {}
    double& at(std::size_t it, std::size_t ix) { return a[it * nx + ix]; }
    double at(std::size_t it, std::size_t ix) const { return a[it * nx + ix]; }
    bool empty() const { return a.empty(); }
};

/** Sampled path of metrics over t in [0,1], x in [-x_max, x_max].
    'psi' holds the full fiber potential of the time-t metric. The
    derivative tables are analytic samples when the construction provides
    them; consumers fall back to finite differences per missing table. The
    time-derivative tables coincide with those of the relative potential.
    d_xx is the full spatial curvature psi'', the density of every volume
    integral along the path. */
struct PathGrid {
    std::vector<double> t_nodes;
    std::vector<double> x_nodes;
    Grid2D psi;
    Grid2D d_t, d_tt, d_tx, d_xx;
    RadialPotential phi0, phi1;   // endpoint data in the common reference gauge
    std::string kind;             // "bergman", "oracle", "linear", "constant"
    int k = 0;                    // level for bergman paths

    double dt() const { return t_nodes[1] - t_nodes[0]; }
    double dx() const { return x_nodes[1] - x_nodes[0]; }
    void require_same_grid(const PathGrid& other) const;
};

std::vector<double> uniform_nodes(double lo, double hi, std::size_t n);

/** Sample a level-k path with all derivative tables filled analytically. */
PathGrid sample_bergman_path(const BergmanGeodesic& bg, std::size_t t_nodes,
                             std::size_t x_nodes, double x_max);

/** Affine interpolation of the endpoint potentials. Not a geodesic (its
    density is -((phi1-phi0)')^2 <= 0); used as the negative control. */
PathGrid sample_linear_path(const RadialPotential& phi0, const RadialPotential& phi1,
                            std::size_t t_nodes, std::size_t x_nodes, double x_max);

/** Second time derivative of the sampled values at an interior node, by the
    fourth-order five-point stencil (second-order three-point next to the
    boundary rows). This is the one derivative the certification checks never
    take from the analytic tables: it ties the stored values themselves to
    the geodesic equation. */
double psi_dtt_from_values(const PathGrid& g, std::size_t it, std::size_t ix);

/** Mixed and spatial derivatives with analytic tables preferred. */
double psi_dtx_at(const PathGrid& g, std::size_t it, std::size_t ix);
double psi_dxx_at(const PathGrid& g, std::size_t it, std::size_t ix);
double psi_dt_at(const PathGrid& g, std::size_t it, std::size_t ix);
double psi_dtt_at(const PathGrid& g, std::size_t it, std::size_t ix);

} // namespace geoberg
