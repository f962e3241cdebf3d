#pragma once

#include <vector>

#include "geoberg/potentials.hpp"

namespace geoberg {

/** Distances between the level-k paths, their envelopes, and the exact
    geodesic, all measured in the sup norm over one common (t,x) grid and
    in the relative gauge of the starting metric. */
struct ConvergenceReport {
    std::vector<int> k_list;
    std::vector<double> e_k;      // sup |phi(t;k) - phi_exact|
    std::vector<int> l_list;
    std::vector<double> E_l;      // sup |envelope over k >= l - phi_exact|
    double e_slope = 0.0;         // log-log fit of e_k vs k; NaN when e_k hits roundoff
    bool E_nonincreasing = true;
    double E_increase_max = 0.0;  // largest observed E_{l+1} - E_l, if any
};

/** e_k and E_l tables for one endpoint pair. The envelope here is the
    zero-shift pointwise maximum of the sampled participants, so
    E_l <= max_{k >= l} e_k holds by construction and is what the
    monotonicity flag quantifies. */
ConvergenceReport convergence_study(const RadialPotential& phi0, const RadialPotential& phi1,
                                    const std::vector<int>& k_list,
                                    const std::vector<int>& l_list,
                                    std::size_t t_nodes, std::size_t x_nodes, double x_max,
                                    std::size_t quad_extra = 16);

} // namespace geoberg
