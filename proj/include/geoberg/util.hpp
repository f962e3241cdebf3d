#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace geoberg {

/** log(1 + e^x) without overflow for large |x|. */
inline double softplus(double x) {
    if (x > 0.0)
        return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

/** Logistic function e^x / (1 + e^x), monotone onto (0,1). */
inline double logistic(double x) {
    if (x >= 0.0)
        return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

/** Derivative of the logistic function, e^x / (1 + e^x)^2. Written as a
    product of two logistics so the tails decay like e^{-|x|} instead of
    underflowing to zero near x = 37 where 1 - logistic(x) rounds to 0. */
inline double dlogistic(double x) {
    return logistic(x) * logistic(-x);
}

/** Solve f(x) = 0 for strictly increasing f on [lo, hi] by safeguarded
    Newton iteration; df may return 0, in which case the step bisects.
    The bracket must satisfy f(lo) <= 0 <= f(hi). */
double solve_increasing(const std::function<double(double)>& f,
                        const std::function<double(double)>& df,
                        double lo, double hi, double xtol = 1e-13);

/** Deterministic splitmix-style generator used for seeded sampling.
    Kept local so draws are identical across platforms and thread counts. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /** Uniform in [0, n). */
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    /** Uniform double in [a, b). */
    double uniform(double a, double b) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }

private:
    std::uint64_t state_;
};

/** Run fn(i) for i in [0, n), splitting across worker threads.
    Thread count comes from the GEOBERG_THREADS environment variable
    (default: hardware concurrency). Work items must write to disjoint
    storage; the split is static so results do not depend on scheduling. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/** Thread count honoring GEOBERG_THREADS. */
unsigned thread_count();

/** Least-squares slope of log(y) against log(x); x, y must be positive. */
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/** FNV-1a over a string, used for config fingerprints. */
std::uint64_t fnv1a(const std::string& s);

} // namespace geoberg
