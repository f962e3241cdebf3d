#include "geoberg/pathgrid.hpp"

#include <cmath>

#include "geoberg/errors.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

std::vector<double> uniform_nodes(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw GridMismatch("uniform_nodes: need n >= 2 and hi > lo");
    std::vector<double> v(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + h * static_cast<double>(i);
    v.back() = hi;   // exact endpoint regardless of rounding
    return v;
}

void PathGrid::require_same_grid(const PathGrid& other) const {
    if (t_nodes.size() != other.t_nodes.size() || x_nodes.size() != other.x_nodes.size())
        throw GridMismatch("path grids have different shapes");
    // Uniform grids that agree at both ends agree everywhere.
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)); };
    if (!close(t_nodes.front(), other.t_nodes.front()) || !close(t_nodes.back(), other.t_nodes.back()) ||
        !close(x_nodes.front(), other.x_nodes.front()) || !close(x_nodes.back(), other.x_nodes.back()))
        throw GridMismatch("path grids cover different windows");
}

PathGrid sample_bergman_path(const BergmanGeodesic& bg, std::size_t t_nodes,
                             std::size_t x_nodes, double x_max) {
    PathGrid g;
    g.t_nodes = uniform_nodes(0.0, 1.0, t_nodes);
    g.x_nodes = uniform_nodes(-x_max, x_max, x_nodes);
    g.psi = Grid2D(t_nodes, x_nodes);
    g.d_t = Grid2D(t_nodes, x_nodes);
    g.d_tt = Grid2D(t_nodes, x_nodes);
    g.d_tx = Grid2D(t_nodes, x_nodes);
    g.d_xx = Grid2D(t_nodes, x_nodes);
    g.phi0 = bg.endpoint0();
    g.phi1 = bg.endpoint1();
    g.kind = "bergman";
    g.k = bg.level();

    parallel_for(t_nodes, [&](std::size_t it) {
        const double t = g.t_nodes[it];
        for (std::size_t ix = 0; ix < x_nodes; ++ix) {
            const GeodesicJet j = bg.jet(t, g.x_nodes[ix]);
            g.psi.at(it, ix) = j.psi;
            g.d_t.at(it, ix) = j.dt;
            g.d_tt.at(it, ix) = j.dtt;
            g.d_tx.at(it, ix) = j.dtx;
            g.d_xx.at(it, ix) = j.psi_dxx;
        }
    });
    return g;
}

PathGrid sample_linear_path(const RadialPotential& phi0, const RadialPotential& phi1,
                            std::size_t t_nodes, std::size_t x_nodes, double x_max) {
    PathGrid g;
    g.t_nodes = uniform_nodes(0.0, 1.0, t_nodes);
    g.x_nodes = uniform_nodes(-x_max, x_max, x_nodes);
    g.psi = Grid2D(t_nodes, x_nodes);
    g.d_t = Grid2D(t_nodes, x_nodes);
    g.d_tt = Grid2D(t_nodes, x_nodes);   // identically zero
    g.d_tx = Grid2D(t_nodes, x_nodes);
    g.d_xx = Grid2D(t_nodes, x_nodes);
    g.phi0 = phi0;
    g.phi1 = phi1;
    g.kind = "linear";

    for (std::size_t it = 0; it < t_nodes; ++it) {
        const double t = g.t_nodes[it];
        for (std::size_t ix = 0; ix < x_nodes; ++ix) {
            const double x = g.x_nodes[ix];
            const double d = phi1(x) - phi0(x);
            g.psi.at(it, ix) = softplus(x) + phi0(x) + t * d;
            g.d_t.at(it, ix) = d;
            g.d_tx.at(it, ix) = phi1.dphi(x) - phi0.dphi(x);
            g.d_xx.at(it, ix) = dlogistic(x) + phi0.ddphi(x)
                              + t * (phi1.ddphi(x) - phi0.ddphi(x));
        }
    }
    return g;
}

double psi_dtt_from_values(const PathGrid& g, std::size_t it, std::size_t ix) {
    const std::size_t nt = g.t_nodes.size();
    if (nt < 3) throw GridMismatch("second time difference needs at least 3 rows");
    const double h2 = g.dt() * g.dt();
    auto f = [&](std::size_t i) { return g.psi.at(i, ix); };
    if (it >= 2 && it + 2 < nt) {
        return (-f(it - 2) + 16.0 * f(it - 1) - 30.0 * f(it)
                + 16.0 * f(it + 1) - f(it + 2)) / (12.0 * h2);
    }
    const std::size_t c = (it == 0) ? 1 : (it + 1 >= nt ? nt - 2 : it);
    return (f(c - 1) - 2.0 * f(c) + f(c + 1)) / h2;
}

double psi_dt_at(const PathGrid& g, std::size_t it, std::size_t ix) {
    if (!g.d_t.empty()) return g.d_t.at(it, ix);
    const std::size_t nt = g.t_nodes.size();
    const double h = g.dt();
    auto f = [&](std::size_t i) { return g.psi.at(i, ix); };
    if (it == 0) return (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * h);
    if (it + 1 >= nt) return (3.0 * f(nt - 1) - 4.0 * f(nt - 2) + f(nt - 3)) / (2.0 * h);
    return (f(it + 1) - f(it - 1)) / (2.0 * h);
}

double psi_dtt_at(const PathGrid& g, std::size_t it, std::size_t ix) {
    if (!g.d_tt.empty()) return g.d_tt.at(it, ix);
    return psi_dtt_from_values(g, it, ix);
}

double psi_dtx_at(const PathGrid& g, std::size_t it, std::size_t ix) {
    if (!g.d_tx.empty()) return g.d_tx.at(it, ix);
    const std::size_t nt = g.t_nodes.size(), nx = g.x_nodes.size();
    const std::size_t i = (it == 0) ? 1 : (it + 1 >= nt ? nt - 2 : it);
    const std::size_t j = (ix == 0) ? 1 : (ix + 1 >= nx ? nx - 2 : ix);
    return (g.psi.at(i + 1, j + 1) - g.psi.at(i + 1, j - 1)
            - g.psi.at(i - 1, j + 1) + g.psi.at(i - 1, j - 1)) / (4.0 * g.dt() * g.dx());
}

double psi_dxx_at(const PathGrid& g, std::size_t it, std::size_t ix) {
    if (!g.d_xx.empty()) return g.d_xx.at(it, ix);
    const std::size_t nx = g.x_nodes.size();
    const std::size_t j = (ix == 0) ? 1 : (ix + 1 >= nx ? nx - 2 : ix);
    const double h2 = g.dx() * g.dx();
    return (g.psi.at(it, j - 1) - 2.0 * g.psi.at(it, j) + g.psi.at(it, j + 1)) / h2;
}

} // namespace geoberg
