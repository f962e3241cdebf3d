#include "geoberg/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoberg/errors.hpp"

namespace geoberg {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

/** Layers [it_a, it_stop] of the forward sweep. */
Grid2D sweep_until(const PathGrid& g, std::size_t it_a, std::size_t ix_a,
                   std::size_t it_stop, std::size_t window) {
    const std::size_t nt = g.t_nodes.size(), nx = g.x_nodes.size();
    if (it_a >= nt || ix_a >= nx || it_stop >= nt)
        throw OutOfDomain("distance sweep event outside the grid");
    if (window == 0) throw OutOfDomain("hop window must be positive");

    // 2 psi'' per node; hop cost averages the two endpoint values.
    Grid2D speed(nt, nx);
    for (std::size_t it = it_a; it <= it_stop; ++it)
        for (std::size_t ix = 0; ix < nx; ++ix)
            speed.at(it, ix) = 2.0 * psi_dxx_at(g, it, ix);

    Grid2D dist(nt, nx);
    std::fill(dist.a.begin(), dist.a.end(), INF);
    dist.at(it_a, ix_a) = 0.0;

    const double dt = g.dt(), dx = g.dx();
    for (std::size_t it = it_a; it < it_stop; ++it) {
        for (std::size_t j = 0; j < nx; ++j) {
            const std::size_t lo = j > window ? j - window : 0;
            const std::size_t hi = std::min(j + window, nx - 1);
            double best = INF;
            for (std::size_t i = lo; i <= hi; ++i) {
                const double base = dist.at(it, i);
                if (base == INF) continue;
                const double step = (static_cast<double>(j) - static_cast<double>(i)) * dx;
                const double avg = 0.5 * (speed.at(it, i) + speed.at(it + 1, j));
                best = std::min(best, base + avg * step * step / dt);
            }
            dist.at(it + 1, j) = best;
        }
    }
    return dist;
}

} // namespace

double geodesic_distance(const PathGrid& g, std::size_t it_a, std::size_t ix_a,
                         std::size_t it_b, std::size_t ix_b, std::size_t window) {
    if (it_b <= it_a) throw OutOfDomain("distance requires strictly increasing time");
    return sweep_until(g, it_a, ix_a, it_b, window).at(it_b, ix_b);
}

Grid2D distance_sweep(const PathGrid& g, std::size_t it_a, std::size_t ix_a,
                      std::size_t window) {
    return sweep_until(g, it_a, ix_a, g.t_nodes.size() - 1, window);
}

} // namespace geoberg
