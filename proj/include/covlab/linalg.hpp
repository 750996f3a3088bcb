#pragma once

#include "covlab/types.hpp"

namespace covlab {

/// Eigenvalues ascending; columns of `eigenvectors` paired with them.
struct SpectralDecomposition {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/// S = Y'Y/T, optionally demeaning the columns of Y first. Divisor is T
/// either way. Symmetric by construction.
Matrix sample_covariance(const Matrix& Y, bool demean);

/// Symmetric eigendecomposition. Throws if the input is not symmetric to
/// 1e-8 (relative to its largest entry).
SpectralDecomposition spectral(const Matrix& S);

/// Sherman-Morrison-Woodbury assembly of a factor-structure precision:
///   (B Sigma_f B' + Sigma_u)^{-1} = Omega - Omega B [Sigma_f^{-1} + B' Omega B]^{-1} B' Omega
/// with Omega = Sigma_u^{-1}. Throws when the inner KxK matrix is singular,
/// reporting its condition number.
Matrix smw_precision(const Matrix& omega, const Matrix& B, const Matrix& sigma_f_inv);

/// Exactly (M + M')/2.
Matrix symmetrize(const Matrix& M);

/// Dense inverse via Cholesky. Throws when the matrix is not positive
/// definite; there is no pseudo-inverse fallback.
Matrix invert_spd(const Matrix& M);

/// 2-norm condition number, meant for small matrices.
double condition_number(const Matrix& M);

double min_eigenvalue(const Matrix& symmetricM);

}  // namespace covlab
