#pragma once

#include <vector>

namespace geoberg {

/** Natural cubic spline on strictly increasing, possibly nonuniform knots.
    Construction is linear in the data, so splines of linear combinations of
    datasets on shared knots can be formed by combining value arrays. */
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> knots, std::vector<double> values);

    double eval(double t) const;
    double deriv(double t) const;
    double deriv2(double t) const;

    const std::vector<double>& knots() const { return x_; }
    const std::vector<double>& values() const { return y_; }

private:
    std::size_t cell(double t) const;

    std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

} // namespace geoberg
