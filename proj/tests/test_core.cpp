#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "geoberg/errors.hpp"
#include "geoberg/legendre.hpp"
#include "geoberg/pathgrid.hpp"
#include "geoberg/potentials.hpp"
#include "geoberg/quadrature.hpp"
#include "geoberg/spline.hpp"
#include "geoberg/util.hpp"

using namespace geoberg;

TEST_CASE("softplus and logistic stay accurate at extreme arguments") {
    CHECK(softplus(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(softplus(50.0) == doctest::Approx(50.0).epsilon(1e-15));
    CHECK(softplus(-745.0) >= 0.0);
    CHECK(std::isfinite(softplus(745.0)));
    CHECK(logistic(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(logistic(40.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(logistic(-40.0) == doctest::Approx(std::exp(-40.0)).epsilon(1e-12));
    // derivative symmetry and the consistency logistic' = logistic(1-logistic)
    CHECK(dlogistic(1.7) == doctest::Approx(dlogistic(-1.7)).epsilon(1e-14));
    CHECK(dlogistic(0.3) == doctest::Approx(logistic(0.3) * (1.0 - logistic(0.3))).epsilon(1e-15));
}

TEST_CASE("solve_increasing inverts the moment map of the round metric") {
    // sigma(x) = 1/4 at x = -log 3
    const double root = solve_increasing([](double x) { return logistic(x) - 0.25; },
                                         [](double x) { return dlogistic(x); }, -50.0, 50.0);
    CHECK(root == doctest::Approx(-std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("two-point Gauss-Legendre rule matches the classical nodes") {
    const QuadratureRule q = build_quadrature(2);
    REQUIRE(q.size() == 2);
    // 1/2 -/+ 1/(2 sqrt 3), weights 1/2 each
    CHECK(q.nodes[0] == doctest::Approx(0.21132486540518713).epsilon(1e-15));
    CHECK(q.nodes[1] == doctest::Approx(0.7886751345948129).epsilon(1e-15));
    CHECK(q.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.weights[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("quadrature integrates polynomials of the promised degree exactly") {
    const QuadratureRule q = build_quadrature(40);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], 77);
    CHECK(s == doctest::Approx(1.0 / 78.0).epsilon(1e-14));

    for (std::size_t n : {1, 2, 7, 33, 64, 144}) {
        const QuadratureRule r = build_quadrature(n);
        double w = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            w += r.weights[i];
            CHECK(r.nodes[i] > 0.0);
            CHECK(r.nodes[i] < 1.0);
            if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        }
        CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("quadrature converges on a smooth non-polynomial integrand") {
    const QuadratureRule q = build_quadrature(20);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * std::exp(q.nodes[i]);
    CHECK(s == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("round metric has zero relative potential and unit volume") {
    const RadialPotential fs = make_fubini_study();
    CHECK(fs.phi(-7.3) == 0.0);
    CHECK(fs.phi(12.0) == 0.0);
    const FiberPotential psi(fs);
    CHECK(psi.psi(0.4) == doctest::Approx(softplus(0.4)).epsilon(1e-15));
    CHECK(volume_total(psi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(psi.moment(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(psi.inverse_moment(0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dilation family reaches its limits and keeps positive curvature") {
    const RadialPotential d = make_dilation_potential(1.0);
    CHECK(d.limit_lo == 0.0);
    CHECK(d.limit_hi == 1.0);
    CHECK(d.phi(-40.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(d.phi(40.0) == doctest::Approx(1.0).epsilon(1e-15));
    const FiberPotential psi(d);
    // the fiber potential is the translated round one
    CHECK(psi.psi(0.3) == doctest::Approx(softplus(1.3)).epsilon(1e-15));
    CHECK(psi.ddpsi(-2.0) == doctest::Approx(dlogistic(-1.0)).epsilon(1e-13));
    CHECK(min_convexity(psi) > 0.0);
    CHECK(volume_total(psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bump factory accepts the shipped parameters and rejects wild ones") {
    const RadialPotential b = make_test_potential("bump", {0.3, 1.5, 0.0});
    CHECK(b.phi(0.0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(b.phi(1.5) == doctest::Approx(0.3 * std::exp(-0.5)).epsilon(1e-14));
    CHECK(min_convexity(FiberPotential(b)) > 0.0);
    // curvature margin relative to the round metric stays comfortable
    const FiberPotential psi(b);
    double rel = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 4000; ++i) {
        const double x = -20.0 + 0.01 * i;
        rel = std::min(rel, psi.ddpsi(x) / dlogistic(x));
    }
    CHECK(rel > 0.1);
    CHECK(rel < 1.0);

    CHECK_THROWS_AS(make_test_potential("bump", {5.0, 0.3, 0.0}), PositivityViolation);
    CHECK_THROWS_AS(make_test_potential("mexican", {1.0}), OutOfDomain);
    // two-parameter form defaults the center to zero
    const RadialPotential c = make_test_potential("bump", {0.1, 2.0});
    CHECK(c.phi(0.0) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("natural cubic spline is exact on linear data") {
    const CubicSpline s({0.0, 0.3, 0.7, 1.0}, {1.0, 1.6, 2.4, 3.0});   // 2p + 1
    CHECK(s.eval(0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.deriv(0.12) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.deriv2(0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("natural cubic spline interpolates sine to fourth order") {
    std::vector<double> knots, vals;
    const std::size_t n = 41;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = M_PI * static_cast<double>(i) / (n - 1);
        knots.push_back(t);
        vals.push_back(std::sin(t));
    }
    const CubicSpline s(knots, vals);
    // sin'' vanishes at both ends, so the natural end conditions are exact
    double worst = 0.0;
    for (double t = 0.05; t < M_PI; t += 0.0317)
        worst = std::max(worst, std::abs(s.eval(t) - std::sin(t)));
    CHECK(worst < 1e-5);
    CHECK(s.deriv(M_PI / 3) == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("legendre transform of the round metric leaves no correction") {
    const SymplecticPotential u = legendre_transform(FiberPotential(make_fubini_study()),
                                                     default_p_knots());
    for (double p : {0.05, 0.315, 0.5, 0.77, 0.99}) {
        CHECK(std::abs(u.delta(p)) < 1e-10);
        CHECK(u.u(p) == doctest::Approx(SymplecticPotential::u_fs(p)).epsilon(1e-9));
    }
    // endpoint values are the potential's limits, zero here
    CHECK(u.delta_values().front() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(u.delta_values().back() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("legendre transform of a dilation is an exactly linear correction") {
    const double c = 1.0;
    const SymplecticPotential u = legendre_transform(FiberPotential(make_dilation_potential(c)),
                                                     default_p_knots());
    // sup_x (p x - softplus(x + c)) = u_fs(p) - c p
    for (double p : {0.1, 0.37, 0.62, 0.9})
        CHECK(u.delta(p) == doctest::Approx(-c * p).epsilon(1e-10));
    CHECK(u.ddelta(0.5) == doctest::Approx(-c).epsilon(1e-9));
}

TEST_CASE("dual argmax recovers the moment coordinate") {
    const FiberPotential psi(make_test_potential("bump", {0.25, 1.4, -0.6}));
    const SymplecticPotential u = legendre_transform(psi, default_p_knots());
    for (double x : {-3.0, -0.6, 0.0, 1.234, 4.0}) {
        const double p = dual_argmax(u, x);
        CHECK(p == doctest::Approx(psi.moment(x)).epsilon(1e-8));
    }
}

TEST_CASE("inverse legendre transform closes the roundtrip") {
    const FiberPotential psi(make_test_potential("bump", {0.3, 1.5, 0.0}));
    const std::vector<double> x_grid = uniform_nodes(-30.0, 30.0, 601);
    const SymplecticPotential u = legendre_transform(psi, default_p_knots());
    const FiberPotential back = inverse_legendre(u, x_grid);
    for (double x : {-8.0, -1.0, 0.0, 0.5, 6.0})
        CHECK(back.psi(x) == doctest::Approx(psi.psi(x)).epsilon(1e-9));
}

TEST_CASE("non-convex symplectic data is refused") {
    // a dent in the middle of the correction makes u non-convex
    std::vector<double> knots{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> vals{0.0, 0.0, 0.8, 0.0, 0.0};
    const SymplecticPotential u(knots, vals);
    CHECK_THROWS_AS(inverse_legendre(u, uniform_nodes(-10.0, 10.0, 101)), ConvexityViolation);
}

TEST_CASE("rng is deterministic, in-range, and roughly centered") {
    Rng a(42), b(42);
    for (int i = 0; i < 8; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    double acc = 0.0;
    for (int i = 0; i < 4000; ++i) {
        const double v = r.uniform(2.0, 3.0);
        CHECK(v >= 2.0);
        CHECK(v < 3.0);
        acc += v;
        CHECK(r.below(10) < 10);
    }
    CHECK(acc / 4000.0 == doctest::Approx(2.5).epsilon(0.02));
}

TEST_CASE("loglog slope recovers an exact power law") {
    CHECK(loglog_slope({1.0, 2.0, 4.0, 8.0}, {3.0, 0.75, 0.1875, 0.046875})
          == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("parallel_for covers every index once and propagates exceptions") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(64,
                                 [](std::size_t i) {
                                     if (i == 37) throw OutOfDomain("worker failure");
                                 }),
                    OutOfDomain);
}
