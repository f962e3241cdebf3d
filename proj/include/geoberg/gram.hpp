#pragma once

#include <Eigen/Dense>
#include <vector>

#include "geoberg/potentials.hpp"
#include "geoberg/quadrature.hpp"

namespace geoberg {

/** Inner-product matrix of the monomial sections z^0..z^k of the k-th
    bundle power, in the L^2 pairing of a metric with unit total volume.
    Rotation-invariant metrics give diagonal matrices; the diagonal is then
    also kept in log form, which stays well-scaled at levels where the raw
    entries span hundreds of orders of magnitude. */
struct GramMatrix {
    int k = 0;
    bool diagonal = true;
    Eigen::MatrixXd entries;          // (k+1) x (k+1), symmetric positive definite
    std::vector<double> log_diag;     // valid when diagonal

    std::size_t dim() const { return static_cast<std::size_t>(k) + 1; }
};

/** How an orthonormal basis is scaled: "raw" gives sections with unit L^2
    norm; "shat" rescales every section by k^{-1/2}, the normalization in
    which projected potentials of the round metric converge with the right
    constant and common spectral shifts drop out. */
enum class BasisNormalization { raw, shat };

/** Coefficients of an orthonormal basis in the monomial sections.
    Rows are basis elements. For diagonal inner products the basis is the
    rescaled monomials and log_coeff holds log of the squared coefficients. */
struct SectionBasis {
    int k = 0;
    bool diagonal = true;
    BasisNormalization normalization = BasisNormalization::raw;
    Eigen::MatrixXd coeff;
    std::vector<double> log_coeff;   // diagonal case: log(A_jj^2), index = monomial power
};

/** Build the Gram matrix of z^0..z^k for the metric psi at level k.
    Diagonal entries are Beta-type integrals computed in the metric's own
    moment variable, where the round-metric case is a polynomial and the
    rule integrates it exactly. The rule must resolve degree 2k, i.e. have
    at least k+1 nodes. */
GramMatrix gram_matrix(const FiberPotential& psi, int k, const QuadratureRule& quad);

/** Orthonormalize the monomials against G (Cholesky; for diagonal G this is
    the entrywise rescaling and the two routes agree exactly). */
SectionBasis orthonormal_basis(const GramMatrix& G, BasisNormalization norm);

/** Density of states rho_k(x): the pointwise squared norm sum of an
    orthonormal basis. Expects a raw-normalized diagonal basis built against
    the same metric psi. Equals k+1 identically for the round metric. */
double bergman_density(const SectionBasis& basis, const FiberPotential& psi, double x);

/** Level-k projection of phi through its own orthonormal sections:
    phi_k = phi + (1/k) log(rho_k / k). Approximates phi to second order
    in 1/k and is always strictly inside the positively curved space. */
RadialPotential projected_potential(const RadialPotential& phi, int k,
                                    const QuadratureRule& quad);

} // namespace geoberg
