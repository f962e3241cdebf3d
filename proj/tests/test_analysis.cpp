#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "geoberg/envelope.hpp"
#include "geoberg/geodesic.hpp"
#include "geoberg/harnack.hpp"
#include "geoberg/pathgrid.hpp"
#include "geoberg/potentials.hpp"
#include "geoberg/quadrature.hpp"
#include "geoberg/stats.hpp"
#include "geoberg/util.hpp"

using namespace geoberg;

namespace {

BergmanGeodesic fs_to_bump(int k) {
    return BergmanGeodesic(make_fubini_study(), make_test_potential("bump", {0.3, 1.5, 0.0}), k,
                           build_quadrature(k + 16));
}

BergmanGeodesic fs_to_dilation(int k, double c = 1.0) {
    return BergmanGeodesic(make_fubini_study(), make_dilation_potential(c), k,
                           build_quadrature(k + 16));
}

} // namespace

TEST_CASE("spectral law of the dilation pair is binomial") {
    const int k = 16;
    const double c = 1.0, t = 0.5, x = 0.0;
    const BergmanGeodesic bg = fs_to_dilation(k, c);
    const SpectralDistribution law = spectral_distribution(bg, t, x);
    REQUIRE(law.prob.size() == static_cast<std::size_t>(k + 1));
    double total = 0.0;
    for (double p : law.prob) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // eigenvalue j c / 2 is drawn with binomial weight at p = sigma(x + c t)
    const double p = logistic(x + c * t);
    for (std::size_t i = 0; i < law.lambda.size(); ++i) {
        const double j = std::round(2.0 * law.lambda[i] / c);
        const double expected = std::exp(std::lgamma(k + 1.0) - std::lgamma(j + 1.0)
                                         - std::lgamma(k - j + 1.0) + j * std::log(p)
                                         + (k - j) * std::log1p(-p));
        CHECK(law.prob[i] == doctest::Approx(expected).epsilon(1e-11));
    }
    CHECK(law.mean == doctest::Approx((c / 2.0) * k * p).epsilon(1e-11));
    CHECK(law.variance == doctest::Approx((c * c / 4.0) * k * p * (1.0 - p)).epsilon(1e-10));
}

TEST_CASE("acceleration equals the variance route") {
    const VarianceReport vr = variance_check(fs_to_bump(8));
    CHECK(vr.max_identity_gap <= 1e-12);
    CHECK(vr.max_fd_gap <= 1e-6);
    CHECK(vr.min_accel >= -1e-12);   // acceleration is a variance, never negative
    CHECK(vr.sup_accel > 0.0);
}

TEST_CASE("dilation acceleration is capped at a quarter of c squared") {
    const double c = 1.0;
    const BergmanGeodesic bg = fs_to_dilation(16, c);
    const VarianceReport vr = variance_check(bg);
    CHECK(vr.sup_accel <= c * c / 4.0 + 1e-12);
    // closed form: accel(t, x) = c^2 sigma'(x + c t)
    CHECK(bg.accel(0.5, 0.0) == doctest::Approx(c * c * dlogistic(0.5)).epsilon(1e-11));
    CHECK(bg.accel(0.25, -3.0) == doctest::Approx(c * c * dlogistic(-2.75)).epsilon(1e-11));
}

TEST_CASE("spacing report reads the ladder gaps") {
    const SpacingReport sp = spacing_check(fs_to_dilation(8).spectrum());
    CHECK(sp.max_gap == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(sp.min_gap == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("energy inequality holds with a computable margin for the bump") {
    const double a = 0.3, w = 1.5;
    const SobolevReport r = sobolev_bound_check(make_test_potential("bump", {a, w, 0.0}));
    CHECK(r.grad_ok);
    CHECK(r.j_ok);
    CHECK(r.c0_norm == doctest::Approx(a).epsilon(1e-12));
    // int (phi')^2 dx = a^2 sqrt(pi) / (2 w) for the Gaussian profile
    CHECK(r.grad_norm_sq == doctest::Approx(a * a * std::sqrt(M_PI) / (2.0 * w)).epsilon(1e-6));
    CHECK(r.j_functional == doctest::Approx(0.5 * r.grad_norm_sq).epsilon(1e-14));
    CHECK(r.grad_norm_sq < 2.0 * r.c0_norm);
}

TEST_CASE("energy inequality is vacuously tight for the round metric") {
    const SobolevReport r = sobolev_bound_check(make_fubini_study());
    CHECK(r.grad_ok);
    CHECK(r.j_ok);
    CHECK(r.c0_norm == 0.0);
    CHECK(r.grad_norm_sq == 0.0);
}

TEST_CASE("boundary modulus shrinks quadratically with the level") {
    const BergmanGeodesic b8 = fs_to_bump(8), b16 = fs_to_bump(16), b32 = fs_to_bump(32);
    const BoundaryModulusReport rep = boundary_modulus_report({&b8, &b16, &b32});
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.transversal_within_bound);
    for (const BoundaryModulusRow& row : rep.rows) {
        CHECK(row.err0 > 0.0);
        CHECK(row.transversal <= row.transversal_bound + 1e-12);
    }
    // the start edge is the round metric, whose projection gap decays
    // quadratically: doubling the level twice buys at least 8x with slack
    CHECK(rep.rows[2].err0 < rep.rows[0].err0 / 8.0);
    // the far edge carries slowly decaying far-field terms from the extreme
    // sections at these levels (measured factor near 5 from k 8 to 32)
    CHECK(rep.rows[1].err1 < rep.rows[0].err1);
    CHECK(rep.rows[2].err1 < rep.rows[1].err1);
    CHECK(rep.rows[2].err1 < rep.rows[0].err1 / 3.0);
    CHECK(rep.sup_k2_err < 10.0);
}

TEST_CASE("pointwise defect is nonnegative along level paths") {
    const HarnackPointwiseReport rep = harnack_differential_check(fs_to_bump(8), 33, 201, 30.0);
    CHECK(rep.defect_min >= -1e-10);
    CHECK(rep.defect_sup > 0.0);
    REQUIRE(rep.defect.nt == 33);
    REQUIRE(rep.defect.nx == 201);
}

TEST_CASE("global velocity comparison accepts seeded events") {
    const HarnackGlobalReport rep = harnack_global_check(fs_to_bump(16), 25, 0x5EED, 65, 401,
                                                         40.0, 8, 1e-9);
    REQUIRE(rep.samples.size() == 25);
    CHECK(rep.violations == 0);
    CHECK(rep.violations4 == 0);   // the quarter-action form is weaker, must also hold
    for (const HarnackSample& s : rep.samples) {
        CHECK(s.it_b > s.it_a);
        if (s.reachable) CHECK(s.rhs4 >= s.rhs - 1e-15);
    }
}

TEST_CASE("identical seeds reproduce identical samples") {
    const BergmanGeodesic bg = fs_to_bump(8);
    const HarnackGlobalReport a = harnack_global_check(bg, 10, 7, 17, 101, 30.0, 8, 1e-9);
    const HarnackGlobalReport b = harnack_global_check(bg, 10, 7, 17, 101, 30.0, 8, 1e-9);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].it_a == b.samples[i].it_a);
        CHECK(a.samples[i].ix_b == b.samples[i].ix_b);
        CHECK(a.samples[i].lhs == b.samples[i].lhs);
        CHECK(a.samples[i].action == b.samples[i].action);
    }
}

TEST_CASE("usc hull check flags a corrupted envelope") {
    const BergmanGeodesic b8 = fs_to_bump(8), b16 = fs_to_bump(16);
    EnvelopeGrid env = envelope({&b8, &b16}, 8, 9, 65, 30.0);
    CHECK(usc_check(env).identity_ok);
    env.values.at(4, 32) -= 10.0;   // a pit the neighbor hull must lift
    CHECK_FALSE(usc_check(env).identity_ok);
}
