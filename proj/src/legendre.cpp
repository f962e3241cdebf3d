#include "geoberg/legendre.hpp"

#include <algorithm>
#include <cmath>

#include "geoberg/errors.hpp"

namespace geoberg {

namespace {

// Knot layout constants for default_p_knots. The x-window [-16,16] is where
// delta can still vary for the supported families; beyond it the correction
// is constant to far below double precision, so the spline simply carries
// flat end cells out to the exact endpoint values. The step is sized by the
// certification stencil: third-derivative jumps of the natural cubic at the
// knots dominate the discrete time-Hessian error of sampled paths, and a
// step of 0.0025 keeps that error a factor of a few under the 1e-6 gate.
constexpr double KNOT_X_MAX = 16.0;
constexpr double KNOT_X_STEP = 0.0025;

} // namespace

SymplecticPotential::SymplecticPotential(std::vector<double> p_knots,
                                         std::vector<double> delta_values)
    : spline_(std::move(p_knots), std::move(delta_values)) {
    const auto& k = spline_.knots();
    if (k.front() != 0.0 || k.back() != 1.0)
        throw GridMismatch("SymplecticPotential: knots must span [0,1] inclusive");
    for (double p : k)
        slope_bound_ = std::max(slope_bound_, std::abs(spline_.deriv(p)));
}

double SymplecticPotential::u_fs(double p) {
    double v = 0.0;
    if (p > 0.0) v += p * std::log(p);
    if (p < 1.0) v += (1.0 - p) * std::log1p(-p);
    return v;
}

double SymplecticPotential::du_fs(double p) {
    return std::log(p) - std::log1p(-p);
}

double SymplecticPotential::ddu_fs(double p) {
    return 1.0 / (p * (1.0 - p));
}

double SymplecticPotential::u(double p) const { return u_fs(p) + spline_.eval(p); }
double SymplecticPotential::du(double p) const { return du_fs(p) + spline_.deriv(p); }
double SymplecticPotential::ddu(double p) const { return ddu_fs(p) + spline_.deriv2(p); }

std::vector<double> default_p_knots() {
    std::vector<double> knots;
    const auto n = static_cast<std::size_t>(std::lround(2.0 * KNOT_X_MAX / KNOT_X_STEP)) + 1;
    knots.reserve(n + 2);
    knots.push_back(0.0);
    for (std::size_t i = 0; i < n; ++i)
        knots.push_back(logistic(-KNOT_X_MAX + KNOT_X_STEP * static_cast<double>(i)));
    knots.push_back(1.0);
    return knots;
}

SymplecticPotential legendre_transform(const FiberPotential& psi,
                                       const std::vector<double>& p_knots) {
    if (p_knots.size() < 3)
        throw GridMismatch("legendre_transform: need at least three knots");
    std::vector<double> delta(p_knots.size());
    for (std::size_t i = 0; i < p_knots.size(); ++i) {
        const double p = p_knots[i];
        if (p <= 0.0) {
            delta[i] = -psi.relative().limit_lo;
        } else if (p >= 1.0) {
            delta[i] = -psi.relative().limit_hi;
        } else {
            const double x = psi.inverse_moment(p);
            delta[i] = p * x - psi.psi(x) - SymplecticPotential::u_fs(p);
        }
    }
    SymplecticPotential u(p_knots, std::move(delta));

    // A valid metric always produces a convex dual; a failure here means the
    // input fiber potential was not strictly convex to begin with.
    const auto& k = u.knots();
    for (std::size_t i = 1; i + 1 < k.size(); ++i)
        if (!(u.ddu(k[i]) > 0.0))
            throw ConvexityViolation("legendre_transform: dual potential not convex at p = " +
                                     std::to_string(k[i]));
    return u;
}

double dual_argmax_logit(const SymplecticPotential& u, double x) {
    // u'(p) = logit(p) + delta'(p), solved in the logit variable q where the
    // equation reads q + delta'(logistic(q)) = x. A q-bracket of half-width
    // slack > sup|delta'| is valid for every real x, whereas p-space brackets
    // collapse to the point 1.0 in double precision once x passes about 36.
    const double slack = u.slope_bound() + 2.0;
    return solve_increasing(
        [&](double t) { return t + u.ddelta(logistic(t)) - x; },
        [&](double t) {
            // convexity of u holds at the knots, not necessarily between
            // them, so clamp to keep the Newton step safeguarded
            return std::max(1.0 + u.d2delta(logistic(t)) * dlogistic(t), 0.0);
        },
        x - slack, x + slack, 1e-13);
}

double dual_argmax(const SymplecticPotential& u, double x) {
    return logistic(dual_argmax_logit(u, x));
}

FiberPotential inverse_legendre(const SymplecticPotential& u,
                                const std::vector<double>& x_grid) {
    const auto& k = u.knots();
    for (std::size_t i = 1; i + 1 < k.size(); ++i)
        if (!(u.ddu(k[i]) > 0.0))
            throw ConvexityViolation("inverse_legendre: input is not convex at p = " +
                                     std::to_string(k[i]));

    auto ucopy = u;  // callables own their data
    RadialPotential r;
    r.family = "legendre-inverse";
    r.limit_lo = -u.delta_values().front();
    r.limit_hi = -u.delta_values().back();
    r.phi = [ucopy](double x) {
        const double p = dual_argmax(ucopy, x);
        return p * x - ucopy.u(p) - softplus(x);
    };
    r.dphi = [ucopy](double x) {
        return dual_argmax(ucopy, x) - logistic(x);
    };
    r.ddphi = [ucopy](double x) {
        // psi'' = 1/u''(p*) in the logit form that survives p* rounding to 1
        const double q = dual_argmax_logit(ucopy, x);
        const double w = dlogistic(q);
        return w / (1.0 + w * ucopy.d2delta(logistic(q))) - dlogistic(x);
    };

    FiberPotential psi(std::move(r));
    for (double x : x_grid)
        if (!(psi.ddpsi(x) > 0.0))
            throw ConvexityViolation("inverse_legendre: reconstructed metric degenerate at x = " +
                                     std::to_string(x));
    return psi;
}

} // namespace geoberg
