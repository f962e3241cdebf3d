#include "geoberg/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoberg/errors.hpp"
#include "geoberg/exact_geodesic.hpp"
#include "geoberg/geodesic.hpp"
#include "geoberg/quadrature.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

ConvergenceReport convergence_study(const RadialPotential& phi0, const RadialPotential& phi1,
                                    const std::vector<int>& k_list,
                                    const std::vector<int>& l_list,
                                    std::size_t t_nodes, std::size_t x_nodes, double x_max,
                                    std::size_t quad_extra) {
    if (k_list.empty()) throw GridMismatch("convergence study needs at least one level");

    const GeodesicPath oracle = exact_geodesic(phi0, phi1, t_nodes, x_nodes, x_max);
    const PathGrid& og = oracle.grid;
    const FiberPotential psi0(phi0);

    // Exact path in the relative gauge: the full softplus part and phi0
    // cancel against the level-k paths, which are relative by definition.
    Grid2D target(t_nodes, x_nodes);
    for (std::size_t it = 0; it < t_nodes; ++it)
        for (std::size_t ix = 0; ix < x_nodes; ++ix)
            target.at(it, ix) = og.psi.at(it, ix) - psi0.psi(og.x_nodes[ix]);

    ConvergenceReport rep;
    rep.k_list = k_list;
    std::vector<Grid2D> sampled;
    for (int k : k_list) {
        const QuadratureRule quad = build_quadrature(static_cast<std::size_t>(k) + quad_extra);
        const BergmanGeodesic bg(phi0, phi1, k, quad);
        Grid2D values(t_nodes, x_nodes);
        parallel_for(t_nodes, [&](std::size_t it) {
            const double t = og.t_nodes[it];
            for (std::size_t ix = 0; ix < x_nodes; ++ix)
                values.at(it, ix) = bg.value(t, og.x_nodes[ix]);
        });
        double sup = 0.0;
        for (std::size_t i = 0; i < values.a.size(); ++i)
            sup = std::max(sup, std::abs(values.a[i] - target.a[i]));
        rep.e_k.push_back(sup);
        sampled.push_back(std::move(values));
    }

    rep.l_list = l_list;
    for (int l : l_list) {
        std::vector<const Grid2D*> members;
        for (std::size_t i = 0; i < k_list.size(); ++i)
            if (k_list[i] >= l) members.push_back(&sampled[i]);
        if (members.empty())
            throw GridMismatch("no level at or above an envelope truncation point");
        double sup = 0.0;
        for (std::size_t c = 0; c < target.a.size(); ++c) {
            double env = -std::numeric_limits<double>::infinity();
            for (const Grid2D* m : members) env = std::max(env, m->a[c]);
            sup = std::max(sup, std::abs(env - target.a[c]));
        }
        rep.E_l.push_back(sup);
    }
    for (std::size_t i = 0; i + 1 < rep.E_l.size(); ++i) {
        const double rise = rep.E_l[i + 1] - rep.E_l[i];
        if (rise > 0.0) {
            rep.E_nonincreasing = rise <= 1e-14 && rep.E_nonincreasing;
            rep.E_increase_max = std::max(rep.E_increase_max, rise);
        }
    }

    const bool positive = std::all_of(rep.e_k.begin(), rep.e_k.end(),
                                      [](double e) { return e > 1e-14; });
    if (positive && k_list.size() >= 2) {
        std::vector<double> ks(k_list.begin(), k_list.end());
        rep.e_slope = loglog_slope(ks, rep.e_k);
    } else {
        rep.e_slope = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

} // namespace geoberg
