#pragma once

#include <cstddef>
#include <vector>

namespace geoberg {

/** Gauss-Legendre rule mapped to the open interval (0,1).
    With n points the rule integrates polynomials up to degree 2n-1
    exactly, which is what inner-product integrals of degree-k sections
    need (degree 2k after the moment change of variables). */
struct QuadratureRule {
    std::vector<double> nodes;    // strictly inside (0,1), ascending
    std::vector<double> weights;  // positive, summing to 1

    std::size_t size() const { return nodes.size(); }
};

/** Build the n-point Gauss-Legendre rule on (0,1).
    Nodes are found by Newton iteration on P_n with the standard
    asymptotic initial guesses; converges to machine precision. */
QuadratureRule build_quadrature(std::size_t n);

} // namespace geoberg
