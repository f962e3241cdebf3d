#include "geoberg/spline.hpp"

#include <algorithm>
#include <cmath>

#include "geoberg/errors.hpp"

namespace geoberg {

CubicSpline::CubicSpline(std::vector<double> knots, std::vector<double> values)
    : x_(std::move(knots)), y_(std::move(values)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n)
        throw GridMismatch("CubicSpline: need >= 3 knots and matching values");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i + 1] > x_[i]))
            throw GridMismatch("CubicSpline: knots must be strictly increasing");

    // Natural boundary: second derivative zero at both ends. Tridiagonal
    // system solved by the Thomas algorithm with scratch in cp/dp.
    m_.assign(n, 0.0);
    std::vector<double> cp(n, 0.0), dp(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x_[i] - x_[i - 1];
        const double hr = x_[i + 1] - x_[i];
        const double rhs = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
        const double diag = 2.0 * (hl + hr) - hl * cp[i - 1];
        cp[i] = hr / diag;
        dp[i] = (rhs - hl * dp[i - 1]) / diag;
    }
    for (std::size_t i = n - 2; i >= 1; --i)
        m_[i] = dp[i] - cp[i] * m_[i + 1];
}

std::size_t CubicSpline::cell(double t) const {
    if (t <= x_.front()) return 0;
    if (t >= x_.back()) return x_.size() - 2;
    const auto it = std::upper_bound(x_.begin(), x_.end(), t);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSpline::eval(double t) const {
    const std::size_t i = cell(t);
    const double h = x_[i + 1] - x_[i];
    const double s = t - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return y_[i] + s * (b + s * (0.5 * m_[i] + s * (m_[i + 1] - m_[i]) / (6.0 * h)));
}

double CubicSpline::deriv(double t) const {
    const std::size_t i = cell(t);
    const double h = x_[i + 1] - x_[i];
    const double s = t - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return b + s * (m_[i] + 0.5 * s * (m_[i + 1] - m_[i]) / h);
}

double CubicSpline::deriv2(double t) const {
    const std::size_t i = cell(t);
    const double h = x_[i + 1] - x_[i];
    const double s = t - x_[i];
    return m_[i] + s * (m_[i + 1] - m_[i]) / h;
}

} // namespace geoberg
