#include "geoberg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoberg/errors.hpp"
#include "geoberg/pathgrid.hpp"

namespace geoberg {

SpectralDistribution spectral_distribution(const BergmanGeodesic& bg, double t, double x) {
    SpectralDistribution d;
    d.k = bg.level();
    d.t = t;
    d.x = x;
    d.lambda = bg.spectrum().lambda;
    bg.weights(t, x, d.prob);
    // Plain accumulation, deliberately not sharing the path evaluator's
    // centered-moment arithmetic: agreement is then a cross-check.
    for (std::size_t j = 0; j < d.prob.size(); ++j) d.mean += d.prob[j] * d.lambda[j];
    for (std::size_t j = 0; j < d.prob.size(); ++j) {
        const double c = d.lambda[j] - d.mean;
        d.variance += d.prob[j] * c * c;
    }
    return d;
}

VarianceReport variance_check(const BergmanGeodesic& bg,
                              std::size_t t_nodes, std::size_t x_nodes,
                              double x_max, double fd_step) {
    VarianceReport rep;
    rep.min_accel = std::numeric_limits<double>::infinity();
    const std::vector<double> ts = uniform_nodes(0.0, 1.0, t_nodes);
    const std::vector<double> xs = uniform_nodes(-x_max, x_max, x_nodes);
    const double k = static_cast<double>(bg.level());

    for (double t : ts) {
        for (double x : xs) {
            VariancePoint pt;
            pt.t = t;
            pt.x = x;
            pt.accel = bg.jet(t, x).dtt;
            pt.var_route = (4.0 / k) * spectral_distribution(bg, t, x).variance;
            const double denom = std::max({std::abs(pt.accel), std::abs(pt.var_route), 1e-12});
            pt.identity_gap = std::abs(pt.accel - pt.var_route) / denom;
            rep.max_identity_gap = std::max(rep.max_identity_gap, pt.identity_gap);
            rep.sup_accel = std::max(rep.sup_accel, pt.accel);
            rep.min_accel = std::min(rep.min_accel, pt.accel);
            rep.points.push_back(pt);
        }
    }

    // Second differences only where the signal dominates the h^-2 roundoff
    // amplification; the analytic identity above covers the rest. Gaps are
    // measured against the acceleration scale of the whole grid: a pointwise
    // quotient at a node where accel is a thousandth of that scale compares
    // rounding noise to itself and certifies nothing.
    const double scale = std::max(rep.sup_accel, std::abs(rep.min_accel));
    const double floor = std::max(1e-3 * scale, 1e-8);
    for (VariancePoint& pt : rep.points) {
        if (std::abs(pt.accel) < floor) continue;
        const double f0 = bg.value(pt.t - fd_step, pt.x);
        const double f1 = bg.value(pt.t, pt.x);
        const double f2 = bg.value(pt.t + fd_step, pt.x);
        pt.fd_accel = (f0 - 2.0 * f1 + f2) / (fd_step * fd_step);
        pt.fd_gap = std::abs(pt.fd_accel - pt.accel) / scale;
        pt.fd_checked = true;
        rep.max_fd_gap = std::max(rep.max_fd_gap, pt.fd_gap);
    }
    return rep;
}

SpacingReport spacing_check(const SpectralPair& sp) {
    SpacingReport rep;
    if (sp.lambda.size() < 2) return rep;
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + 1 < sp.lambda.size(); ++j) {
        const double gap = std::abs(sp.lambda[j] - sp.lambda[j + 1]);
        rep.max_gap = std::max(rep.max_gap, gap);
        rep.min_gap = std::min(rep.min_gap, gap);
    }
    return rep;
}

SobolevReport sobolev_bound_check(const RadialPotential& phi,
                                  std::size_t x_nodes, double x_max) {
    if (x_nodes < 3 || x_nodes % 2 == 0)
        throw GridMismatch("Simpson rule needs an odd node count of at least 3");
    SobolevReport rep;
    const std::vector<double> xs = uniform_nodes(-x_max, x_max, x_nodes);
    const double h = xs[1] - xs[0];
    double sum = 0.0;
    for (std::size_t i = 0; i < x_nodes; ++i) {
        const double g = phi.dphi(xs[i]);
        const double w = (i == 0 || i + 1 == x_nodes) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * g * g;
        rep.c0_norm = std::max(rep.c0_norm, std::abs(phi(xs[i])));
    }
    rep.grad_norm_sq = sum * h / 3.0;
    rep.j_functional = 0.5 * rep.grad_norm_sq;
    rep.grad_ok = rep.grad_norm_sq <= 2.0 * rep.c0_norm + 1e-9;
    rep.j_ok = rep.j_functional <= 2.0 * rep.c0_norm + 1e-9;
    return rep;
}

BoundaryModulusReport boundary_modulus_report(const std::vector<const BergmanGeodesic*>& family,
                                              std::size_t x_nodes, double x_max,
                                              double t_edge) {
    BoundaryModulusReport rep;
    const std::vector<double> xs = uniform_nodes(-x_max, x_max, x_nodes);
    for (const BergmanGeodesic* bg : family) {
        BoundaryModulusRow row;
        row.k = bg->level();
        row.transversal_bound = bg->velocity_bound();
        const RadialPotential& p0 = bg->endpoint0();
        const RadialPotential& p1 = bg->endpoint1();
        for (double x : xs) {
            const GeodesicJet j0 = bg->jet(0.0, x);
            const GeodesicJet j1 = bg->jet(1.0, x);
            row.tangential = std::max({row.tangential, std::abs(j0.dx), std::abs(j1.dx)});
            row.err0 = std::max(row.err0, std::abs(j0.phi));
            row.err1 = std::max(row.err1, std::abs(j1.phi - (p1(x) - p0(x))));
            for (double t : {0.0, t_edge, 1.0 - t_edge, 1.0})
                row.transversal = std::max(row.transversal, std::abs(bg->velocity(t, x)));
        }
        row.k2_err = static_cast<double>(row.k) * static_cast<double>(row.k)
                   * std::max(row.err0, row.err1);
        rep.sup_k2_err = std::max(rep.sup_k2_err, row.k2_err);
        if (row.transversal > row.transversal_bound + 1e-12)
            rep.transversal_within_bound = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace geoberg
