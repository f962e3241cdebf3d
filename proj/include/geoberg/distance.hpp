#pragma once

#include "geoberg/pathgrid.hpp"

namespace geoberg {

/** Squared-speed action between two grid events on a path of metrics:
      inf over monotone-in-t grid paths of sum (ds/dt)^2 dt,
    with spatial line element ds = sqrt(2 psi''(t,x)) dx, the normalization
    under which the velocity comparison below is sharp along geodesics.
    Computed by a forward dynamic program with hops bounded by 'window'
    grid columns per time step; restricting the path set biases the value
    upward, which is the safe direction for every inequality that adds
    this action to its right-hand side. Events outside each other's hop
    cone get +infinity. Requires it_b > it_a (OutOfDomain otherwise). */
double geodesic_distance(const PathGrid& g, std::size_t it_a, std::size_t ix_a,
                         std::size_t it_b, std::size_t ix_b, std::size_t window = 8);

/** One forward sweep from (it_a, ix_a): action to every later event.
    Rows at or before it_a, and unreachable events, hold +infinity
    (except the zero start). */
Grid2D distance_sweep(const PathGrid& g, std::size_t it_a, std::size_t ix_a,
                      std::size_t window = 8);

} // namespace geoberg
