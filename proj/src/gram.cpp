#include "geoberg/gram.hpp"

#include <cmath>

#include "geoberg/errors.hpp"

namespace geoberg {

namespace {

/** log sum_i exp(e_i) with the maximum factored out. */
double log_sum_exp(const std::vector<double>& e) {
    double m = e[0];
    for (double v : e) m = std::max(m, v);
    double s = 0.0;
    for (double v : e) s += std::exp(v - m);
    return m + std::log(s);
}

} // namespace

GramMatrix gram_matrix(const FiberPotential& psi, int k, const QuadratureRule& quad) {
    if (k < 1)
        throw OutOfDomain("gram_matrix: level k must be >= 1");
    if (quad.size() < static_cast<std::size_t>(k) + 1)
        throw OutOfDomain("gram_matrix: quadrature cannot resolve degree 2k; need >= k+1 nodes");

    const std::size_t n = quad.size();
    // Change of variables to the metric's own moment coordinate q = psi'(x):
    // the volume density becomes flat on (0,1) and the integrand of entry j
    // is exp(j x(q) - k psi(x(q))), bounded for every j.
    std::vector<double> xq(n), base(n);
    for (std::size_t i = 0; i < n; ++i) {
        xq[i] = psi.inverse_moment(quad.nodes[i]);
        base[i] = -static_cast<double>(k) * psi.psi(xq[i]) + std::log(quad.weights[i]);
    }

    GramMatrix G;
    G.k = k;
    G.diagonal = true;
    G.log_diag.resize(G.dim());
    std::vector<double> e(n);
    for (int j = 0; j <= k; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            e[i] = static_cast<double>(j) * xq[i] + base[i];
        const double lg = log_sum_exp(e);
        if (!std::isfinite(lg))
            throw NonPositiveEntry("gram_matrix: entry " + std::to_string(j) +
                                   " did not evaluate to a positive number");
        G.log_diag[static_cast<std::size_t>(j)] = lg;
    }

    G.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(G.dim()),
                                      static_cast<Eigen::Index>(G.dim()));
    for (std::size_t j = 0; j < G.dim(); ++j)
        G.entries(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
            std::exp(G.log_diag[j]);
    return G;
}

SectionBasis orthonormal_basis(const GramMatrix& G, BasisNormalization norm) {
    SectionBasis B;
    B.k = G.k;
    B.diagonal = G.diagonal;
    B.normalization = norm;
    const auto dim = static_cast<Eigen::Index>(G.dim());
    const double shift = norm == BasisNormalization::shat ? std::log(static_cast<double>(G.k)) : 0.0;

    if (G.diagonal) {
        B.log_coeff.resize(G.dim());
        B.coeff = Eigen::MatrixXd::Zero(dim, dim);
        for (std::size_t j = 0; j < G.dim(); ++j) {
            B.log_coeff[j] = -G.log_diag[j] - shift;
            B.coeff(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
                std::exp(0.5 * B.log_coeff[j]);
        }
        return B;
    }

    Eigen::LLT<Eigen::MatrixXd> llt(G.entries);
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("orthonormal_basis: inner-product matrix is not positive definite");
    Eigen::MatrixXd L = llt.matrixL();
    B.coeff = L.inverse() * std::exp(-0.5 * shift);
    return B;
}

double bergman_density(const SectionBasis& basis, const FiberPotential& psi, double x) {
    if (!basis.diagonal)
        throw GridMismatch("bergman_density: pointwise evaluation expects a diagonal basis");
    const double kpsi = static_cast<double>(basis.k) * psi.psi(x);
    double m = -std::numeric_limits<double>::infinity();
    const std::size_t dim = basis.log_coeff.size();
    std::vector<double> e(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        e[j] = basis.log_coeff[j] + static_cast<double>(j) * x - kpsi;
        m = std::max(m, e[j]);
    }
    double s = 0.0;
    for (double v : e) s += std::exp(v - m);
    return std::exp(m + std::log(s));
}

RadialPotential projected_potential(const RadialPotential& phi, int k,
                                    const QuadratureRule& quad) {
    FiberPotential psi(phi);
    const GramMatrix G = gram_matrix(psi, k, quad);
    const SectionBasis B = orthonormal_basis(G, BasisNormalization::raw);

    const double kd = static_cast<double>(k);
    const double logk = std::log(kd);
    const std::vector<double> lc = B.log_coeff;

    // Weights P_j(x) proportional to exp(log A_j^2 + j x - k psi(x)) define
    // the projected potential and its first two derivatives through the
    // mean and variance of the monomial exponent.
    auto stats = [lc, psi, kd](double x, double& lse, double& mean, double& var) {
        const double kpsi = kd * psi.psi(x);
        const std::size_t dim = lc.size();
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < dim; ++j)
            m = std::max(m, lc[j] + static_cast<double>(j) * x - kpsi);
        double s = 0.0, sj = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double w = std::exp(lc[j] + static_cast<double>(j) * x - kpsi - m);
            s += w;
            sj += w * static_cast<double>(j);
        }
        mean = sj / s;
        double sv = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double w = std::exp(lc[j] + static_cast<double>(j) * x - kpsi - m);
            const double d = static_cast<double>(j) - mean;
            sv += w * d * d;
        }
        var = sv / s;
        lse = m + std::log(s);
    };

    RadialPotential out;
    out.family = "projected";
    out.params = {static_cast<double>(k)};
    out.phi = [stats, phi, kd, logk](double x) {
        double lse, mean, var;
        stats(x, lse, mean, var);
        return phi.phi(x) + (lse - logk) / kd;
    };
    out.dphi = [stats, phi, psi, kd](double x) {
        double lse, mean, var;
        stats(x, lse, mean, var);
        return phi.dphi(x) + mean / kd - psi.dpsi(x);
    };
    out.ddphi = [stats, phi, psi, kd](double x) {
        double lse, mean, var;
        stats(x, lse, mean, var);
        return phi.ddphi(x) + var / kd - psi.ddpsi(x);
    };
    out.limit_lo = -(G.log_diag.front() + logk) / kd;
    out.limit_hi = -(G.log_diag.back() + logk) / kd;
    return out;
}

} // namespace geoberg
