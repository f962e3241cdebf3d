#include "geoberg/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoberg/errors.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

EnvelopeGrid envelope(const std::vector<const BergmanGeodesic*>& family, int l,
                      std::size_t t_nodes, std::size_t x_nodes, double x_max,
                      const std::vector<double>& shifts) {
    if (family.empty()) throw GridMismatch("envelope of an empty family");
    if (!shifts.empty() && shifts.size() != family.size())
        throw GridMismatch("shift list not aligned with the family");

    EnvelopeGrid env;
    env.l = l;
    env.t_nodes = uniform_nodes(0.0, 1.0, t_nodes);
    env.x_nodes = uniform_nodes(-x_max, x_max, x_nodes);
    env.values = Grid2D(t_nodes, x_nodes);

    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < family.size(); ++m)
        if (family[m]->level() >= l) members.push_back(m);
    if (members.empty()) throw GridMismatch("no participant at or above the truncation level");
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
        return family[a]->level() < family[b]->level();
    });
    for (std::size_t m : members) {
        env.levels.push_back(family[m]->level());
        env.shifts.push_back(shifts.empty() ? 0.0 : shifts[m]);
    }

    std::fill(env.values.a.begin(), env.values.a.end(),
              -std::numeric_limits<double>::infinity());
    parallel_for(t_nodes, [&](std::size_t it) {
        const double t = env.t_nodes[it];
        for (std::size_t ix = 0; ix < x_nodes; ++ix) {
            const double x = env.x_nodes[ix];
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < members.size(); ++i)
                best = std::max(best, family[members[i]]->value(t, x) + env.shifts[i]);
            env.values.at(it, ix) = best;
        }
    });
    return env;
}

UscCheck usc_check(const EnvelopeGrid& env) {
    const std::size_t nt = env.t_nodes.size(), nx = env.x_nodes.size();
    UscCheck chk;
    for (std::size_t it = 0; it < nt; ++it) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double v = env.values.at(it, ix);
            const std::size_t i0 = it > 1 ? it - 2 : 0, i1 = std::min(it + 2, nt - 1);
            const std::size_t j0 = ix > 1 ? ix - 2 : 0, j1 = std::min(ix + 2, nx - 1);

            double nb = v;
            double allow = 0.0;
            for (std::size_t i = i0; i <= i1; ++i) {
                for (std::size_t j = j0; j <= j1; ++j) {
                    const bool in_ring = i + 1 >= it && i <= it + 1 && j + 1 >= ix && j <= ix + 1;
                    if (in_ring) nb = std::max(nb, env.values.at(i, j));
                    // slope samples: axis steps in the 5x5 patch avoiding
                    // the node itself, so its own value cannot set the bar
                    if (i + 1 <= i1 && !(i == it && j == ix) && !(i + 1 == it && j == ix))
                        allow = std::max(allow, std::abs(env.values.at(i + 1, j) -
                                                         env.values.at(i, j)));
                    if (j + 1 <= j1 && !(i == it && j == ix) && !(i == it && j + 1 == ix))
                        allow = std::max(allow, std::abs(env.values.at(i, j + 1) -
                                                         env.values.at(i, j)));
                }
            }
            // The hull takes diagonal steps, so allow one step in each axis.
            chk.hull_gap = std::max(chk.hull_gap, nb - v);
            chk.slope_allowance = std::max(chk.slope_allowance, allow);
            chk.worst_excess = std::max(chk.worst_excess, (nb - v) - 2.0 * allow);
        }
    }
    chk.identity_ok = chk.worst_excess <= 1e-12;
    return chk;
}

std::vector<double> monotone_shift(const std::vector<double>& a, double sum_cap) {
    if (a.empty()) throw OutOfDomain("monotone_shift of an empty sequence");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] > 0.0)) throw OutOfDomain("boundary-error sequence must be positive");
        if (i > 0 && a[i] > a[i - 1])
            throw OutOfDomain("boundary-error sequence must be nonincreasing");
    }
    std::vector<double> c(a.size());
    double tail = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) {
        tail += a[i];
        if (tail > sum_cap)
            throw NotSummable("boundary-error series exceeds the configured cap");
        c[i] = 2.0 * tail;
    }
    return c;
}

} // namespace geoberg
