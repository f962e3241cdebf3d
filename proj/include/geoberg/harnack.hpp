#pragma once

#include <cstdint>
#include <vector>

#include "geoberg/geodesic.hpp"
#include "geoberg/pathgrid.hpp"

namespace geoberg {

/** Pointwise form of the velocity comparison: the defect
      phi_tt - (phi_tx)^2 / psi''
    is the squared normal component of the path's variation field, hence
    nonnegative along any path of this construction up to roundoff.
    (The literal gradient form 2 phi_tt - 4 (phi_tx)^2 / psi'' differs from
    twice the defect by -2 (phi_tx)^2 / psi'' <= 0, a fixed-sign term; the
    defect is the assertable quantity and what the grid stores.) */
struct HarnackPointwiseReport {
    Grid2D defect;
    double defect_min = 0.0;
    double defect_sup = 0.0;
    std::size_t t_nodes = 0, x_nodes = 0;
    double x_max = 0.0;
};

HarnackPointwiseReport harnack_differential_check(const BergmanGeodesic& bg,
                                                  std::size_t t_nodes = 65,
                                                  std::size_t x_nodes = 401,
                                                  double x_max = 40.0);

/** One velocity-comparison sample between grid events (tau, xi) < (T, X):
    lhs = phidot(xi, tau) against rhs = phidot(X, T) + action / 8, with the
    action from the dynamic program. The DP overestimates the true infimum,
    which only raises rhs, so a violation is never a discretization
    artifact of the path restriction. rhs4 tracks the same comparison with
    the action divided by 4 for convention drift monitoring. */
struct HarnackSample {
    std::size_t it_a = 0, ix_a = 0, it_b = 0, ix_b = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rhs4 = 0.0;
    double action = 0.0;
    bool reachable = true;    // unreachable events give action = inf, vacuous pass
    bool violated = false;
};

struct HarnackGlobalReport {
    std::vector<HarnackSample> samples;
    std::size_t violations = 0;
    std::size_t violations4 = 0;
    double min_margin = 0.0;   // min over reachable samples of rhs - lhs
};

/** Seeded global check on an already-sampled path grid. */
HarnackGlobalReport harnack_global_check(const PathGrid& g, std::size_t n_samples,
                                         std::uint64_t seed, std::size_t window = 8,
                                         double tol = 1e-9);

/** Convenience wrapper sampling the level path first. */
HarnackGlobalReport harnack_global_check(const BergmanGeodesic& bg, std::size_t n_samples,
                                         std::uint64_t seed,
                                         std::size_t t_nodes = 129, std::size_t x_nodes = 801,
                                         double x_max = 40.0, std::size_t window = 8,
                                         double tol = 1e-9);

} // namespace geoberg
