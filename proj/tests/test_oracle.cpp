#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "geoberg/convergence.hpp"
#include "geoberg/exact_geodesic.hpp"
#include "geoberg/mass.hpp"
#include "geoberg/pathgrid.hpp"
#include "geoberg/potentials.hpp"
#include "geoberg/util.hpp"

using namespace geoberg;

TEST_CASE("oracle reproduces the dilation geodesic to near machine accuracy") {
    // the symplectic correction of a dilation is exactly linear in p, so the
    // spline represents it with zero interpolation error and the whole
    // transform pipeline collapses to the closed form
    const GeodesicPath g = exact_geodesic(make_fubini_study(), make_dilation_potential(1.0), 33,
                                          201, 30.0);
    CHECK(g.endpoint_err0 <= 1e-10);
    CHECK(g.endpoint_err1 <= 1e-10);
    CHECK(g.roundtrip_err <= 1e-9);
    double worst_v = 0.0, worst_dt = 0.0;
    for (std::size_t it = 0; it < g.grid.psi.nt; ++it)
        for (std::size_t ix = 0; ix < g.grid.psi.nx; ++ix) {
            const double t = g.grid.t_nodes[it], x = g.grid.x_nodes[ix];
            worst_v = std::max(worst_v, std::abs(g.grid.psi.at(it, ix) - softplus(x + t)));
            worst_dt = std::max(worst_dt, std::abs(g.grid.d_t.at(it, ix) - logistic(x + t)));
        }
    CHECK(worst_v <= 1e-11);
    CHECK(worst_dt <= 1e-10);
}

TEST_CASE("oracle leaves the second time derivative to the values on purpose") {
    const GeodesicPath g = exact_geodesic(make_fubini_study(),
                                          make_test_potential("bump", {0.3, 1.5, 0.0}), 33, 201,
                                          30.0);
    CHECK(g.grid.kind == "oracle");
    CHECK(g.grid.d_tt.empty());
    REQUIRE_FALSE(g.grid.d_t.empty());
    REQUIRE_FALSE(g.grid.d_tx.empty());
    REQUIRE_FALSE(g.grid.d_xx.empty());
}

TEST_CASE("oracle residual is at stencil scale for the shipped pairs") {
    const GeodesicPath g = exact_geodesic(make_test_potential("bump", {0.25, 1.4, -0.6}),
                                          make_test_potential("bump", {0.18, 1.1, 0.7}), 129, 401,
                                          40.0);
    CHECK(geodesic_equation_residual(g.grid) <= 1e-6);
    CHECK(g.endpoint_err0 <= 1e-8);
    CHECK(g.endpoint_err1 <= 1e-8);
}

TEST_CASE("oracle beats the linear interpolation energy") {
    const RadialPotential a = make_fubini_study();
    const RadialPotential b = make_test_potential("bump", {0.3, 1.5, 0.0});
    const GeodesicPath oracle = exact_geodesic(a, b, 65, 401, 40.0);
    const PathGrid linear = sample_linear_path(a, b, 65, 401, 40.0);
    const double oe = path_energy(oracle.grid);
    const double le = path_energy(linear);
    CHECK(oe > 0.0);
    CHECK(oe < le);   // geodesics minimize energy among same-endpoint paths
}

TEST_CASE("oracle endpoint rows match the metric data in the fiber gauge") {
    const RadialPotential a = make_test_potential("bump", {0.25, 1.4, -0.6});
    const RadialPotential b = make_test_potential("bump", {0.18, 1.1, 0.7});
    const GeodesicPath g = exact_geodesic(a, b, 17, 201, 30.0);
    const FiberPotential pa(a), pb(b);
    double w0 = 0.0, w1 = 0.0;
    for (std::size_t ix = 0; ix < g.grid.psi.nx; ++ix) {
        const double x = g.grid.x_nodes[ix];
        w0 = std::max(w0, std::abs(g.grid.psi.at(0, ix) - pa.psi(x)));
        w1 = std::max(w1, std::abs(g.grid.psi.at(g.grid.psi.nt - 1, ix) - pb.psi(x)));
    }
    CHECK(w0 <= 1e-8);
    CHECK(w1 <= 1e-8);
}

TEST_CASE("convergence study contracts toward the oracle") {
    const ConvergenceReport rep = convergence_study(
        make_fubini_study(), make_test_potential("bump", {0.3, 1.5, 0.0}), {8, 16, 32},
        {8, 16, 32}, 33, 201, 30.0);
    REQUIRE(rep.e_k.size() == 3);
    CHECK(rep.e_k[0] > rep.e_k[2]);   // errors shrink with the level
    CHECK(rep.E_nonincreasing);
    for (std::size_t i = 0; i < rep.l_list.size(); ++i) {
        double cap = 0.0;
        for (std::size_t j = 0; j < rep.k_list.size(); ++j)
            if (rep.k_list[j] >= rep.l_list[i]) cap = std::max(cap, rep.e_k[j]);
        CHECK(rep.E_l[i] <= cap + 1e-14);   // envelope never exceeds its worst member
    }
}

TEST_CASE("dilation convergence matches the closed form exactly") {
    const ConvergenceReport rep = convergence_study(make_fubini_study(),
                                                    make_dilation_potential(1.0), {8, 16},
                                                    {8, 16}, 17, 201, 30.0);
    for (std::size_t i = 0; i < rep.k_list.size(); ++i) {
        const double k = rep.k_list[i];
        const double exact = std::log((k + 1.0) / k) / k;
        CHECK(rep.e_k[i] == doctest::Approx(exact).epsilon(1e-8));
        CHECK(rep.E_l[i] == doctest::Approx(exact).epsilon(1e-8));
    }
    CHECK(rep.e_slope == doctest::Approx(-2.0).epsilon(0.05));   // e_k = log(1 + 1/k)/k ~ 1/k^2
}

TEST_CASE("single-level study degenerates gracefully") {
    const ConvergenceReport rep = convergence_study(
        make_fubini_study(), make_test_potential("bump", {0.3, 1.5, 0.0}), {16}, {16}, 9, 65,
        30.0);
    REQUIRE(rep.e_k.size() == 1);
    REQUIRE(rep.E_l.size() == 1);
    CHECK(rep.E_nonincreasing);   // vacuously: there is nothing to compare
    CHECK(rep.e_k[0] > 0.0);
    CHECK(rep.E_l[0] == doctest::Approx(rep.e_k[0]).epsilon(1e-12));
}
