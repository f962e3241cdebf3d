#include "geoberg/potentials.hpp"

#include <cmath>

#include "geoberg/errors.hpp"

namespace geoberg {

double FiberPotential::inverse_moment(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw OutOfDomain("inverse_moment: p must lie strictly inside (0,1)");
    // The moment map of every admissible family equals the logistic function
    // plus a derivative that vanishes at both ends, so a wide fixed bracket
    // is always valid; Newton takes over once bisection reaches smoothness.
    const double lo = -746.0, hi = 746.0;
    return solve_increasing(
        [&](double x) { return dpsi(x) - p; },
        [&](double x) { return ddpsi(x); },
        lo, hi, 1e-14);
}

RadialPotential make_fubini_study() {
    RadialPotential r;
    r.family = "fs";
    r.phi = [](double) { return 0.0; };
    r.dphi = [](double) { return 0.0; };
    r.ddphi = [](double) { return 0.0; };
    r.limit_lo = 0.0;
    r.limit_hi = 0.0;
    return r;
}

RadialPotential make_dilation_potential(double c) {
    RadialPotential r;
    r.family = "dilation";
    r.params = {c};
    r.phi = [c](double x) { return softplus(x + c) - softplus(x); };
    r.dphi = [c](double x) { return logistic(x + c) - logistic(x); };
    r.ddphi = [c](double x) { return dlogistic(x + c) - dlogistic(x); };
    r.limit_lo = 0.0;
    r.limit_hi = c;
    return r;
}

double moment_map(const FiberPotential& psi, double x) {
    return psi.dpsi(x);
}

double min_convexity(const FiberPotential& psi, double x_max, std::size_t scan_nodes) {
    double m = psi.ddpsi(-x_max);
    const double h = 2.0 * x_max / static_cast<double>(scan_nodes - 1);
    for (std::size_t i = 1; i < scan_nodes; ++i) {
        const double v = psi.ddpsi(-x_max + h * static_cast<double>(i));
        if (v < m) m = v;
    }
    return m;
}

void require_positive(const FiberPotential& psi, double floor) {
    const double m = min_convexity(psi);
    if (!(m > floor))
        throw PositivityViolation(
            "potential '" + psi.relative().family +
            "' leaves the positively curved space: min psi'' = " + std::to_string(m));
}

double volume_total(const FiberPotential& psi, double x_max) {
    return psi.dpsi(x_max) - psi.dpsi(-x_max);
}

RadialPotential make_test_potential(const std::string& family_id,
                                    const std::vector<double>& params) {
    if (family_id == "fs")
        return make_fubini_study();
    if (family_id == "dilation") {
        if (params.size() != 1)
            throw OutOfDomain("dilation family takes one parameter (the shift)");
        return make_dilation_potential(params[0]);
    }
    if (family_id != "bump")
        throw OutOfDomain("unknown potential family '" + family_id + "'");
    if (params.size() < 2 || params.size() > 3)
        throw OutOfDomain("bump family takes {amplitude, width[, center]}");

    const double a = params[0];
    const double w = params[1];
    const double x0 = params.size() == 3 ? params[2] : 0.0;
    if (!(w > 0.0))
        throw OutOfDomain("bump width must be positive");

    RadialPotential r;
    r.family = "bump";
    r.params = {a, w, x0};
    r.phi = [a, w, x0](double x) {
        const double u = (x - x0) / w;
        return a * std::exp(-0.5 * u * u);
    };
    r.dphi = [a, w, x0](double x) {
        const double u = (x - x0) / w;
        return -a * u / w * std::exp(-0.5 * u * u);
    };
    r.ddphi = [a, w, x0](double x) {
        const double u = (x - x0) / w;
        return a / (w * w) * (u * u - 1.0) * std::exp(-0.5 * u * u);
    };
    r.limit_lo = 0.0;
    r.limit_hi = 0.0;

    require_positive(FiberPotential(r));
    return r;
}

} // namespace geoberg
