#pragma once

#include <Eigen/Dense>
#include <vector>

#include "geoberg/gram.hpp"

namespace geoberg {

/** Simultaneous diagonalization data of two inner products on the space of
    degree-k sections: a basis that is orthonormal for G0 and diagonalizes
    G1 with entries e^{-2 lambda_i}. Eigenvalues are sorted descending.
    For a pair of diagonal matrices the basis consists of rescaled monomials
    and 'exponent' records which monomial each spectral index came from. */
struct SpectralPair {
    int k = 0;
    bool diagonal = true;
    std::vector<double> lambda;       // descending
    std::vector<int> exponent;        // diagonal case: monomial power per index
    std::vector<double> log_coeff0;   // diagonal case: log A0^2 aligned with lambda
    Eigen::MatrixXd basis;            // rows x_i with x G0 x^T = I, x G1 x^T = e^{-2 lambda} I

    double lambda_abs_max() const {
        double m = 0.0;
        for (double l : lambda) m = std::max(m, std::abs(l));
        return m;
    }
};

/** Solve the change-of-basis spectrum between two metrics' inner products:
    G0 x = e^{2 lambda} G1 x. Diagonal pairs take the exact per-entry path
    lambda_j = (log G0_jj - log G1_jj) / 2 in log arithmetic; dense pairs go
    through the generalized self-adjoint eigensolver after a conditioning
    check (ConditioningError above 1e12). Swapping the inputs negates and
    reverses the spectrum. */
SpectralPair spectral_pair(const GramMatrix& G0, const GramMatrix& G1);

} // namespace geoberg
