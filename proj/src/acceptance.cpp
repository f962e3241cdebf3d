#include "geoberg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "geoberg/convergence.hpp"
#include "geoberg/errors.hpp"
#include "geoberg/exact_geodesic.hpp"
#include "geoberg/geodesic.hpp"
#include "geoberg/gram.hpp"
#include "geoberg/harnack.hpp"
#include "geoberg/mass.hpp"
#include "geoberg/pathgrid.hpp"
#include "geoberg/potentials.hpp"
#include "geoberg/quadrature.hpp"
#include "geoberg/stats.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

namespace {

constexpr std::uint64_t SUITE_SEED = 0x5EED;
constexpr std::size_t DEFAULT_T = 129, DEFAULT_X = 801;
constexpr double X_MAX = 40.0;

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.6g", v);
    return b;
}

struct NamedPair {
    std::string name;
    RadialPotential a, b;
};

std::vector<NamedPair> shipped_pairs() {
    std::vector<NamedPair> v;
    v.push_back({"fs-dilation", make_fubini_study(), make_dilation_potential(1.0)});
    v.push_back({"fs-bump", make_fubini_study(),
                 make_test_potential("bump", {0.3, 1.5, 0.0})});
    v.push_back({"bump-bump", make_test_potential("bump", {0.25, 1.4, -0.6}),
                 make_test_potential("bump", {0.18, 1.1, 0.7})});
    return v;
}

/** Random valid bumps; parameters that break positive curvature are
    redrawn, so the factory's guard is exercised as the rejection step. */
std::vector<RadialPotential> seeded_bumps(std::size_t n, std::uint64_t seed) {
    std::vector<RadialPotential> out;
    Rng rng(seed);
    std::size_t attempts = 0;
    while (out.size() < n) {
        if (++attempts > 1000)
            throw OutOfDomain("seeded bump sampling did not find enough valid potentials");
        const double sign = rng.below(2) ? 1.0 : -1.0;
        const double a = sign * rng.uniform(0.05, 0.4);
        const double w = rng.uniform(0.8, 2.5);
        const double x0 = rng.uniform(-3.0, 3.0);
        try {
            out.push_back(make_test_potential("bump", {a, w, x0}));
        } catch (const PositivityViolation&) {
        }
    }
    return out;
}

template <typename F>
CriterionResult run_timed(int id, const std::string& name, F&& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    const auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = elapsed(start);
    return r;
}

const std::vector<int>& level_sweep() {
    static const std::vector<int> ks{8, 16, 32, 64, 128};
    return ks;
}

BergmanGeodesic make_bg(const NamedPair& pair, int k, std::size_t quad_extra = 16) {
    return BergmanGeodesic(pair.a, pair.b, k,
                           build_quadrature(static_cast<std::size_t>(k) + quad_extra));
}

} // namespace

std::vector<CriterionResult> run_acceptance(double tol_scale) {
    const double s = tol_scale;
    const double widen = std::max(1.0, tol_scale);   // for two-sided windows and ratios
    std::vector<CriterionResult> results;
    const std::vector<NamedPair> pairs = shipped_pairs();

    results.push_back(run_timed(1, "gram-closed-form", [&](CriterionResult& r) {
        const auto t0 = Clock::now();
        const double tol = 1e-10 * s;
        const FiberPotential fs(make_fubini_study());
        double worst = 0.0;
        for (int k = 1; k <= 64; ++k) {
            const GramMatrix G = gram_matrix(fs, k, build_quadrature(k + 16));
            for (int j = 0; j <= k; ++j) {
                const double beta = std::exp(std::lgamma(j + 1.0) + std::lgamma(k - j + 1.0)
                                             - std::lgamma(k + 2.0));
                worst = std::max(worst, std::abs(G.entries(j, j) - beta) / beta);
            }
        }
        const double secs = elapsed(t0);
        r.pass = worst <= tol && secs < 1.0;
        r.detail = "max_rel_err=" + num(worst) + " tol=" + num(tol)
                 + " secs=" + num(secs) + " limit=1";
    }));

    results.push_back(run_timed(2, "density-of-states", [&](CriterionResult& r) {
        const double tol = 1e-10 * s;
        const std::vector<double> xs = uniform_nodes(-20.0, 20.0, 100);
        const FiberPotential fs(make_fubini_study());
        double worst_fs = 0.0;
        for (int k = 1; k <= 64; ++k) {
            const SectionBasis basis = orthonormal_basis(
                gram_matrix(fs, k, build_quadrature(k + 16)), BasisNormalization::raw);
            for (double x : xs)
                worst_fs = std::max(worst_fs,
                                    std::abs(bergman_density(basis, fs, x) - (k + 1.0)));
        }
        // The first correction rho_k - k settles to its limit profile only
        // where the basis is past onset for every k compared; beyond |x| ~ 5
        // the k = 16 sup is dominated by single extreme sections and grows
        // with k, so the comparison is restricted to the moment interior.
        const std::vector<double> xs_bulk = uniform_nodes(-5.0, 5.0, 100);
        const FiberPotential bump(make_test_potential("bump", {0.3, 1.5, 0.0}));
        double corr_min = std::numeric_limits<double>::infinity(), corr_max = 0.0;
        for (int k : {16, 32, 64}) {
            const SectionBasis basis = orthonormal_basis(
                gram_matrix(bump, k, build_quadrature(k + 16)), BasisNormalization::raw);
            double sup = 0.0;
            for (double x : xs_bulk)
                sup = std::max(sup, std::abs(bergman_density(basis, bump, x)
                                             - static_cast<double>(k)));
            corr_min = std::min(corr_min, sup);
            corr_max = std::max(corr_max, sup);
        }
        const double ratio = corr_max / corr_min;
        r.pass = worst_fs <= tol && ratio <= 2.0 * widen;
        r.detail = "fs_max_abs_err=" + num(worst_fs) + " tol=" + num(tol)
                 + " bump_correction_ratio=" + num(ratio) + " limit=" + num(2.0 * widen);
    }));

    results.push_back(run_timed(3, "spectrum-exactness", [&](CriterionResult& r) {
        const double tol = 1e-10 * s;
        double worst_gap = 0.0;
        for (int k = 1; k <= 128; ++k) {
            const BergmanGeodesic bg = make_bg(pairs[0], k);
            const std::vector<double>& lam = bg.spectrum().lambda;
            for (std::size_t j = 0; j + 1 < lam.size(); ++j)
                worst_gap = std::max(worst_gap, std::abs((lam[j] - lam[j + 1]) - 0.5));
        }
        double worst_zero = 0.0;
        const NamedPair same{"same", pairs[1].b, pairs[1].b};
        for (int k : {8, 32, 128}) {
            const BergmanGeodesic bg = make_bg(same, k);
            worst_zero = std::max(worst_zero, bg.spectrum().lambda_abs_max());
        }
        r.pass = worst_gap <= tol && worst_zero <= tol;
        r.detail = "max_spacing_err=" + num(worst_gap) + " identical_pair_max_lambda="
                 + num(worst_zero) + " tol=" + num(tol);
    }));

    results.push_back(run_timed(4, "closed-form-geodesic", [&](CriterionResult& r) {
        const double tol = 1e-9 * s;
        double worst = 0.0;
        const std::vector<double> ts = uniform_nodes(0.0, 1.0, 17);
        const std::vector<double> xs = uniform_nodes(-X_MAX, X_MAX, 161);
        for (int k : level_sweep()) {
            const BergmanGeodesic bg = make_bg(pairs[0], k);
            const double shift = std::log((k + 1.0) / k) / k;
            for (double t : ts)
                for (double x : xs) {
                    const double exact = softplus(x + t) - softplus(x);
                    worst = std::max(worst, std::abs(bg.value(t, x) - exact - shift));
                }
        }
        r.pass = worst <= tol;
        r.detail = "sup_err=" + num(worst) + " tol=" + num(tol);
    }));

    results.push_back(run_timed(5, "velocity-bound", [&](CriterionResult& r) {
        const double tol = 1e-12 * s;
        std::size_t violations = 0;
        double worst_excess = -std::numeric_limits<double>::infinity();
        const std::vector<double> ts = uniform_nodes(0.0, 1.0, 17);
        const std::vector<double> xs = uniform_nodes(-X_MAX, X_MAX, 161);
        for (const NamedPair& pair : pairs) {
            for (int k : level_sweep()) {
                const BergmanGeodesic bg = make_bg(pair, k);
                const double bound = bg.velocity_bound();
                for (double t : ts)
                    for (double x : xs) {
                        const double excess = std::abs(bg.velocity(t, x)) - bound;
                        worst_excess = std::max(worst_excess, excess);
                        if (excess > tol) ++violations;
                    }
            }
        }
        r.pass = violations == 0;
        r.detail = "violations=" + num(static_cast<double>(violations))
                 + " worst_excess=" + num(worst_excess) + " tol=" + num(tol);
    }));

    results.push_back(run_timed(6, "mass-decay", [&](CriterionResult& r) {
        const auto t0 = Clock::now();
        const MassDecayStudy study =
            ma_mass_decay_study(pairs[1].a, pairs[1].b, level_sweep());
        const double secs = elapsed(t0);
        const double ratio_limit = 3.0 * widen;
        const double slope_lo = -1.7 * widen, slope_hi = -0.7 / widen;
        const bool slope_ok = std::isfinite(study.slope)
                            && study.slope >= slope_lo && study.slope <= slope_hi;
        r.pass = study.max_over_min_k_mass <= ratio_limit && slope_ok && secs < 60.0;
        r.detail = "k_mass_ratio=" + num(study.max_over_min_k_mass)
                 + " limit=" + num(ratio_limit) + " slope=" + num(study.slope)
                 + " window=[" + num(slope_lo) + "," + num(slope_hi) + "]"
                 + " sup_k_mass=" + num(study.sup_k_mass)
                 + " secs=" + num(secs) + " limit=60";
    }));

    results.push_back(run_timed(7, "boundary-bulk-gap", [&](CriterionResult& r) {
        const int k = 32;
        const QuadratureRule quad = build_quadrature(k + 16);
        const BergmanGeodesic bg(pairs[1].a, pairs[1].b, k, quad);
        const double boundary = ma_mass_boundary(bg, quad);
        auto gap = [&](std::size_t tn, std::size_t xn) {
            const double bulk = ma_mass_bulk(sample_bergman_path(bg, tn, xn, X_MAX));
            return std::abs(bulk - boundary) / std::abs(boundary);
        };
        const double gap1 = gap(DEFAULT_T, DEFAULT_X);
        const double gap2 = gap(2 * DEFAULT_T - 1, 2 * DEFAULT_X - 1);
        r.pass = gap1 <= 0.05 * widen && gap2 <= 0.015 * widen;
        r.detail = "gap_default=" + num(gap1) + " limit=" + num(0.05 * widen)
                 + " gap_refined=" + num(gap2) + " limit=" + num(0.015 * widen);
    }));

    results.push_back(run_timed(8, "envelope-convergence", [&](CriterionResult& r) {
        const double tol = 1e-9 * s;
        const std::vector<int> l_list{8, 16, 32, 64};
        bool all_monotone = true, dilation_exact = true, bump_gain = true;
        std::string measured;
        for (const NamedPair& pair : pairs) {
            const ConvergenceReport rep = convergence_study(
                pair.a, pair.b, level_sweep(), l_list, DEFAULT_T, DEFAULT_X, X_MAX);
            all_monotone = all_monotone && rep.E_nonincreasing;
            if (pair.name == "fs-dilation") {
                for (std::size_t i = 0; i < l_list.size(); ++i) {
                    const double exact = std::log((l_list[i] + 1.0) / l_list[i]) / l_list[i];
                    if (std::abs(rep.E_l[i] - exact) > tol) dilation_exact = false;
                }
            }
            if (pair.name == "fs-bump")
                bump_gain = rep.E_l.back() < rep.E_l.front() / 3.0 * widen;
            measured += " " + pair.name + ":E=[";
            for (std::size_t i = 0; i < rep.E_l.size(); ++i)
                measured += (i ? "," : "") + num(rep.E_l[i]);
            measured += "]";
        }
        r.pass = all_monotone && dilation_exact && bump_gain;
        r.detail = "monotone=" + std::string(all_monotone ? "yes" : "no")
                 + " dilation_exact(tol=" + num(tol) + ")="
                 + (dilation_exact ? "yes" : "no")
                 + " bump_E64_lt_E8_over_3=" + (bump_gain ? "yes" : "no") + measured;
    }));

    results.push_back(run_timed(9, "oracle-certification", [&](CriterionResult& r) {
        const double tol_res = 1e-6 * s, tol_end = 1e-8 * s;
        double worst_res = 0.0, worst_end = 0.0, worst_energy_margin =
            std::numeric_limits<double>::infinity();
        for (const NamedPair& pair : pairs) {
            const GeodesicPath oracle =
                exact_geodesic(pair.a, pair.b, DEFAULT_T, DEFAULT_X, X_MAX);
            worst_end = std::max({worst_end, oracle.endpoint_err0, oracle.endpoint_err1});
            worst_res = std::max(worst_res, geodesic_equation_residual(oracle.grid));
            const double oe = path_energy(oracle.grid);
            const double le = path_energy(
                sample_linear_path(pair.a, pair.b, DEFAULT_T, DEFAULT_X, X_MAX));
            worst_energy_margin = std::min(worst_energy_margin, le - oe);
        }
        r.pass = worst_res <= tol_res && worst_end <= tol_end && worst_energy_margin > 0.0;
        r.detail = "residual=" + num(worst_res) + " tol=" + num(tol_res)
                 + " endpoint_err=" + num(worst_end) + " tol=" + num(tol_end)
                 + " min_energy_margin=" + num(worst_energy_margin);
    }));

    results.push_back(run_timed(10, "acceleration-variance", [&](CriterionResult& r) {
        const double tol_id = 1e-10 * s, tol_fd = 1e-6 * s;
        double worst_id = 0.0, worst_fd = 0.0, dilation_sup = 0.0;
        for (const NamedPair& pair : pairs) {
            for (int k : level_sweep()) {
                const BergmanGeodesic bg = make_bg(pair, k);
                const VarianceReport vr = variance_check(bg);
                worst_id = std::max(worst_id, vr.max_identity_gap);
                worst_fd = std::max(worst_fd, vr.max_fd_gap);
                if (pair.name == "fs-dilation")
                    dilation_sup = std::max(dilation_sup, vr.sup_accel);
            }
        }
        const double cap = 0.25 + 1e-9 * s;
        r.pass = worst_id <= tol_id && worst_fd <= tol_fd && dilation_sup <= cap;
        r.detail = "identity_gap=" + num(worst_id) + " tol=" + num(tol_id)
                 + " fd_gap=" + num(worst_fd) + " tol=" + num(tol_fd)
                 + " dilation_sup_accel=" + num(dilation_sup) + " cap=" + num(cap);
    }));

    results.push_back(run_timed(11, "harnack", [&](CriterionResult& r) {
        const double tol_defect = 1e-8 * s;
        double worst_defect = std::numeric_limits<double>::infinity();
        for (const NamedPair& pair : pairs)
            for (int k : {8, 32, 128})
                worst_defect = std::min(worst_defect,
                                        harnack_differential_check(make_bg(pair, k)).defect_min);
        std::size_t violations = 0;
        double min_margin = std::numeric_limits<double>::infinity();
        for (const NamedPair& pair : pairs) {
            const HarnackGlobalReport rep = harnack_global_check(
                make_bg(pair, 32), 50, SUITE_SEED, DEFAULT_T, DEFAULT_X, X_MAX, 8, 1e-9 * s);
            violations += rep.violations;
            min_margin = std::min(min_margin, rep.min_margin);
        }
        r.pass = worst_defect >= -tol_defect && violations == 0;
        r.detail = "min_defect=" + num(worst_defect) + " floor=" + num(-tol_defect)
                 + " global_violations=" + num(static_cast<double>(violations))
                 + " min_margin=" + num(min_margin);
    }));

    results.push_back(run_timed(12, "energy-inequality", [&](CriterionResult& r) {
        const double cushion = 1e-9 * s;
        std::vector<RadialPotential> pots;
        pots.push_back(make_fubini_study());
        for (const NamedPair& pair : pairs) {
            pots.push_back(pair.a);
            pots.push_back(pair.b);
        }
        for (RadialPotential& p : seeded_bumps(10, SUITE_SEED + 1))
            pots.push_back(std::move(p));
        std::size_t violations = 0;
        double min_slack = std::numeric_limits<double>::infinity();
        for (const RadialPotential& p : pots) {
            const SobolevReport rep = sobolev_bound_check(p);
            const double slack = 2.0 * rep.c0_norm + cushion - rep.j_functional;
            min_slack = std::min(min_slack, slack);
            if (slack < 0.0 || rep.grad_norm_sq > 2.0 * rep.c0_norm + cushion) ++violations;
        }
        r.pass = violations == 0;
        r.detail = "potentials=" + num(static_cast<double>(pots.size()))
                 + " violations=" + num(static_cast<double>(violations))
                 + " min_slack=" + num(min_slack);
    }));

    results.push_back(run_timed(13, "volume-conservation", [&](CriterionResult& r) {
        const double tol = 1e-10 * s;
        std::vector<RadialPotential> pots;
        pots.push_back(make_fubini_study());
        for (const NamedPair& pair : pairs) {
            pots.push_back(pair.a);
            pots.push_back(pair.b);
        }
        for (RadialPotential& p : seeded_bumps(10, SUITE_SEED + 1))
            pots.push_back(std::move(p));
        double worst = 0.0;
        for (const RadialPotential& p : pots)
            worst = std::max(worst, std::abs(volume_total(FiberPotential(p), X_MAX) - 1.0));
        r.pass = worst <= tol;
        r.detail = "max_volume_err=" + num(worst) + " tol=" + num(tol);
    }));

    return results;
}

void print_criteria(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        std::printf("[%s] %2d %-24s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
}

} // namespace geoberg
