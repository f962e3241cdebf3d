#include "geoberg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "geoberg/errors.hpp"

namespace geoberg {

namespace {

constexpr double COND_LIMIT = 1e12;

void check_conditioning(const Eigen::MatrixXd& G, const char* name) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigenFailure(std::string("spectral_pair: eigenvalue estimate failed for ") + name);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0))
        throw NotPositiveDefinite(std::string("spectral_pair: ") + name +
                                  " is not positive definite");
    if (hi / lo > COND_LIMIT)
        throw ConditioningError(std::string("spectral_pair: ") + name +
                                " condition estimate " + std::to_string(hi / lo) +
                                " exceeds 1e12; dense route untrustworthy");
}

} // namespace

SpectralPair spectral_pair(const GramMatrix& G0, const GramMatrix& G1) {
    if (G0.k != G1.k)
        throw GridMismatch("spectral_pair: levels differ");
    const std::size_t dim = G0.dim();

    SpectralPair sp;
    sp.k = G0.k;

    if (G0.diagonal && G1.diagonal) {
        // Exact per-entry arithmetic on log entries. No conditioning issue
        // arises here: each eigenvalue depends on one entry of each matrix.
        std::vector<std::size_t> order(dim);
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> lam(dim);
        for (std::size_t j = 0; j < dim; ++j)
            lam[j] = 0.5 * (G0.log_diag[j] - G1.log_diag[j]);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (lam[a] != lam[b]) return lam[a] > lam[b];
            return a < b;
        });

        sp.diagonal = true;
        sp.lambda.resize(dim);
        sp.exponent.resize(dim);
        sp.log_coeff0.resize(dim);
        sp.basis = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                         static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            const std::size_t j = order[i];
            sp.lambda[i] = lam[j];
            sp.exponent[i] = static_cast<int>(j);
            sp.log_coeff0[i] = -G0.log_diag[j];
            sp.basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::exp(-0.5 * G0.log_diag[j]);
        }
        return sp;
    }

    check_conditioning(G0.entries, "G0");
    check_conditioning(G1.entries, "G1");

    // G0 v = mu G1 v with mu = e^{2 lambda}; the solver returns eigenvectors
    // orthonormal against G1, which rescale to the G0-orthonormal basis.
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(
        G0.entries, G1.entries, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (ges.info() != Eigen::Success)
        throw EigenFailure("spectral_pair: generalized eigensolver did not converge");

    sp.diagonal = false;
    sp.lambda.resize(dim);
    sp.basis.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    const auto& mu = ges.eigenvalues();
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) {
                  return mu(static_cast<Eigen::Index>(a)) > mu(static_cast<Eigen::Index>(b));
              });
    for (std::size_t i = 0; i < dim; ++i) {
        const auto j = static_cast<Eigen::Index>(order[i]);
        const double m = mu(j);
        if (!(m > 0.0))
            throw NotPositiveDefinite("spectral_pair: nonpositive generalized eigenvalue");
        sp.lambda[i] = 0.5 * std::log(m);
        sp.basis.row(static_cast<Eigen::Index>(i)) = ges.eigenvectors().col(j).transpose() / std::sqrt(m);
    }
    return sp;
}

} // namespace geoberg
