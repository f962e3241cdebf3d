#pragma once

#include <vector>

#include "geoberg/geodesic.hpp"
#include "geoberg/pathgrid.hpp"

namespace geoberg {

/** Pointwise supremum of a family of level-k path potentials, in the
    relative gauge of the common starting metric. */
struct EnvelopeGrid {
    std::vector<double> t_nodes;
    std::vector<double> x_nodes;
    Grid2D values;                // sup over participants of phi(t;k) + shift_k
    std::vector<int> levels;      // participating levels, ascending
    std::vector<double> shifts;   // aligned with levels
    int l = 0;                    // lower truncation: only k >= l participate
};

/** Envelope over the members of 'family' with level >= l, sampled on the
    uniform grid. 'shifts' is either empty (all zero, measurement mode) or
    aligned with 'family'; the shifted participant is phi(t;k) + shift_k.
    Shifts tend to zero as k grows, so they move the large-k limit by
    nothing while making the boundary rows monotone for the construction
    checks below. */
EnvelopeGrid envelope(const std::vector<const BergmanGeodesic*>& family, int l,
                      std::size_t t_nodes, std::size_t x_nodes, double x_max,
                      const std::vector<double>& shifts = {});

/** Discrete stand-in for the upper-semicontinuous regularization: the 3x3
    neighbor-max hull. For a finite maximum of continuous functions the
    continuum regularization is the identity, so the hull may lift a node
    by at most one grid step of the envelope's own slope. The allowance at
    each node is measured from the neighbor-to-neighbor increments around
    it, never from steps into the node itself; otherwise a corrupted cell
    would widen its own tolerance and pass. hull_gap is the largest lift
    observed, slope_allowance the largest increment backing any node's
    allowance, worst_excess the largest violation of lift over allowance;
    identity_ok asserts no node exceeds its local allowance (up to
    roundoff). A failure means the data is not the sample of a continuous
    maximum: mismatched gauges, mismatched grids, or damaged cells. */
struct UscCheck {
    double hull_gap = 0.0;
    double slope_allowance = 0.0;
    double worst_excess = 0.0;
    bool identity_ok = true;
};

UscCheck usc_check(const EnvelopeGrid& env);

/** Turns a summable sequence of boundary errors a_k into tail shifts
    c_k = 2 * sum_{j >= k} a_j (partial sums over the given list; the
    dropped tail is bounded by 2 * a_last * k_last for a_k ~ C/k^2).
    The telescoping c_k - c_{k+1} = 2 a_k beats any boundary wobble of
    size a_k + a_{k+1}, which is what makes shifted boundary rows strictly
    decreasing. Requires a positive nonincreasing input; throws OutOfDomain
    otherwise and NotSummable when the sum exceeds sum_cap. */
std::vector<double> monotone_shift(const std::vector<double>& a, double sum_cap = 1e6);

} // namespace geoberg
