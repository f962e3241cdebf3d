#include "geoberg/harnack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoberg/distance.hpp"
#include "geoberg/errors.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

HarnackPointwiseReport harnack_differential_check(const BergmanGeodesic& bg,
                                                  std::size_t t_nodes,
                                                  std::size_t x_nodes,
                                                  double x_max) {
    HarnackPointwiseReport rep;
    rep.t_nodes = t_nodes;
    rep.x_nodes = x_nodes;
    rep.x_max = x_max;
    rep.defect = Grid2D(t_nodes, x_nodes);
    rep.defect_min = std::numeric_limits<double>::infinity();
    rep.defect_sup = -std::numeric_limits<double>::infinity();

    const std::vector<double> ts = uniform_nodes(0.0, 1.0, t_nodes);
    const std::vector<double> xs = uniform_nodes(-x_max, x_max, x_nodes);
    parallel_for(t_nodes, [&](std::size_t it) {
        for (std::size_t ix = 0; ix < x_nodes; ++ix) {
            const GeodesicJet j = bg.jet(ts[it], xs[ix]);
            if (!(j.psi_dxx > 0.0))
                throw DegenerateMetric("psi'' <= 0 during the differential check");
            rep.defect.at(it, ix) = j.dtt - j.dtx * j.dtx / j.psi_dxx;
        }
    });
    for (double v : rep.defect.a) {
        rep.defect_min = std::min(rep.defect_min, v);
        rep.defect_sup = std::max(rep.defect_sup, v);
    }
    return rep;
}

HarnackGlobalReport harnack_global_check(const PathGrid& g, std::size_t n_samples,
                                         std::uint64_t seed, std::size_t window,
                                         double tol) {
    const std::size_t nt = g.t_nodes.size(), nx = g.x_nodes.size();
    if (nt < 2) throw GridMismatch("global check needs at least two time rows");

    HarnackGlobalReport rep;
    rep.min_margin = std::numeric_limits<double>::infinity();
    Rng rng(seed);
    for (std::size_t s = 0; s < n_samples; ++s) {
        HarnackSample smp;
        smp.it_a = rng.below(nt - 1);
        smp.it_b = smp.it_a + 1 + rng.below(nt - 1 - smp.it_a);
        smp.ix_a = rng.below(nx);
        smp.ix_b = rng.below(nx);

        smp.action = geodesic_distance(g, smp.it_a, smp.ix_a, smp.it_b, smp.ix_b, window);
        smp.reachable = std::isfinite(smp.action);
        smp.lhs = psi_dt_at(g, smp.it_a, smp.ix_a);
        const double later = psi_dt_at(g, smp.it_b, smp.ix_b);
        smp.rhs = later + smp.action / 8.0;
        smp.rhs4 = later + smp.action / 4.0;
        smp.violated = smp.lhs > smp.rhs + tol;
        if (smp.violated) ++rep.violations;
        if (smp.lhs > smp.rhs4 + tol) ++rep.violations4;
        if (smp.reachable) rep.min_margin = std::min(rep.min_margin, smp.rhs - smp.lhs);
        rep.samples.push_back(smp);
    }
    return rep;
}

HarnackGlobalReport harnack_global_check(const BergmanGeodesic& bg, std::size_t n_samples,
                                         std::uint64_t seed,
                                         std::size_t t_nodes, std::size_t x_nodes,
                                         double x_max, std::size_t window, double tol) {
    const PathGrid g = sample_bergman_path(bg, t_nodes, x_nodes, x_max);
    return harnack_global_check(g, n_samples, seed, window, tol);
}

} // namespace geoberg
