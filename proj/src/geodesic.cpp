#include "geoberg/geodesic.hpp"

#include <cmath>
#include <limits>

#include "geoberg/errors.hpp"
#include "geoberg/gram.hpp"

namespace geoberg {

BergmanGeodesic::BergmanGeodesic(RadialPotential phi0, RadialPotential phi1, int k,
                                 const QuadratureRule& quad)
    : k_(k), phi0_(std::move(phi0)), phi1_(std::move(phi1)), psi0_(phi0_) {
    FiberPotential psi1(phi1_);
    const GramMatrix G0 = gram_matrix(psi0_, k, quad);
    const GramMatrix G1 = gram_matrix(psi1, k, quad);
    sp_ = spectral_pair(G0, G1);
}

GeodesicJet BergmanGeodesic::jet(double t, double x) const {
    const std::size_t dim = sp_.lambda.size();
    const double kd = static_cast<double>(k_);
    const double base = -kd * psi0_.psi(x) - std::log(kd);

    thread_local std::vector<double> w;
    w.resize(dim);

    // exponents of the shat-normalized terms; max factored before exp
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dim; ++i) {
        const double e = 2.0 * sp_.lambda[i] * t + sp_.log_coeff0[i] +
                         static_cast<double>(sp_.exponent[i]) * x + base;
        w[i] = e;
        m = std::max(m, e);
    }
    double s = 0.0, sl = 0.0, se = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double wi = std::exp(w[i] - m);
        w[i] = wi;
        s += wi;
        sl += wi * sp_.lambda[i];
        se += wi * static_cast<double>(sp_.exponent[i]);
    }
    const double lmean = sl / s;
    const double emean = se / s;
    double vll = 0.0, vee = 0.0, vle = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double dl = sp_.lambda[i] - lmean;
        const double de = static_cast<double>(sp_.exponent[i]) - emean;
        vll += w[i] * dl * dl;
        vee += w[i] * de * de;
        vle += w[i] * dl * de;
    }
    vll /= s; vee /= s; vle /= s;

    GeodesicJet j;
    j.phi = (m + std::log(s)) / kd;
    j.dt = 2.0 * lmean / kd;
    j.dtt = 4.0 * vll / kd;
    j.dx = emean / kd - psi0_.dpsi(x);
    j.dtx = 2.0 * vle / kd;
    j.dxx = vee / kd - psi0_.ddpsi(x);
    j.psi = psi0_.psi(x) + j.phi;
    j.psi_dx = emean / kd;
    j.psi_dxx = vee / kd;
    return j;
}

void BergmanGeodesic::weights(double t, double x, std::vector<double>& probs) const {
    const std::size_t dim = sp_.lambda.size();
    probs.resize(dim);
    const double kd = static_cast<double>(k_);
    const double base = -kd * psi0_.psi(x);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dim; ++i) {
        probs[i] = 2.0 * sp_.lambda[i] * t + sp_.log_coeff0[i] +
                   static_cast<double>(sp_.exponent[i]) * x + base;
        m = std::max(m, probs[i]);
    }
    double s = 0.0;
    for (double& p : probs) { p = std::exp(p - m); s += p; }
    for (double& p : probs) p /= s;
}

BoundsReport lambda_bounds_report(const BergmanGeodesic& bg,
                                  std::size_t t_nodes, std::size_t x_nodes, double x_max) {
    BoundsReport r;
    r.k = bg.level();
    const auto& lam = bg.spectrum().lambda;
    r.lambda_max = lam.front();
    r.lambda_min = lam.back();
    r.abs_max_over_k = bg.spectrum().lambda_abs_max() / static_cast<double>(bg.level());

    // endpoint separation, both sign conventions
    double cp = -std::numeric_limits<double>::infinity();
    double cm = -std::numeric_limits<double>::infinity();
    const double hx = 2.0 * x_max / static_cast<double>(x_nodes - 1);
    for (std::size_t i = 0; i < x_nodes; ++i) {
        const double x = -x_max + hx * static_cast<double>(i);
        const double d = bg.endpoint1().phi(x) - bg.endpoint0().phi(x);
        cp = std::max(cp, d);
        cm = std::max(cm, -d);
    }
    r.c_plus = std::max(cp, 0.0);
    r.c_minus = std::max(cm, 0.0);

    const double kd = static_cast<double>(bg.level());
    constexpr double tol = 1e-9;
    if (r.c_plus > 1e-12)
        r.interval_ok = r.lambda_max >= 0.5 * r.c_plus * kd - tol &&
                        r.lambda_max <= 3.0 * r.c_plus * kd + tol;

    double sup_path = 0.0, sup_start = 0.0;
    const double ht = 1.0 / static_cast<double>(t_nodes - 1);
    for (std::size_t i = 0; i < x_nodes; ++i) {
        const double x = -x_max + hx * static_cast<double>(i);
        sup_start = std::max(sup_start, std::abs(bg.value(0.0, x)));
        for (std::size_t it = 0; it < t_nodes; ++it)
            sup_path = std::max(sup_path, std::abs(bg.value(ht * static_cast<double>(it), x)));
    }
    r.sup_path = sup_path;
    r.sup_start = sup_start;
    r.path_bound_ok = sup_path <= 2.0 * bg.spectrum().lambda_abs_max() / kd + sup_start + tol;
    return r;
}

} // namespace geoberg
