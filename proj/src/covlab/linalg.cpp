#include "covlab/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <sstream>
#include <stdexcept>

namespace covlab {

Matrix sample_covariance(const Matrix& Y, bool demean) {
    const Index T = Y.rows();
    const Index p = Y.cols();
    if (T < 2) {
        throw std::invalid_argument("sample_covariance: need T >= 2, got T=" + std::to_string(T));
    }
    if (p < 1) {
        throw std::invalid_argument("sample_covariance: need p >= 1");
    }
    Matrix S;
    if (demean) {
        Eigen::RowVectorXd means = Y.colwise().mean();
        Matrix centered = Y.rowwise() - means;
        S = centered.transpose() * centered / static_cast<double>(T);
    } else {
        S = Y.transpose() * Y / static_cast<double>(T);
    }
    return symmetrize(S);
}

SpectralDecomposition spectral(const Matrix& S) {
    if (S.rows() != S.cols()) {
        throw std::invalid_argument("spectral: matrix must be square");
    }
    const double scale = std::max(1.0, S.cwiseAbs().maxCoeff());
    const double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-8 * scale) {
        std::ostringstream msg;
        msg << "spectral: input not symmetric, max |S - S'| = " << asym;
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(S));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral: eigendecomposition failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix smw_precision(const Matrix& omega, const Matrix& B, const Matrix& sigma_f_inv) {
    const Index p = omega.rows();
    const Index K = B.cols();
    if (omega.cols() != p) {
        throw std::invalid_argument("smw_precision: omega must be square");
    }
    if (B.rows() != p) {
        throw std::invalid_argument("smw_precision: loadings row count must match omega");
    }
    if (sigma_f_inv.rows() != K || sigma_f_inv.cols() != K) {
        throw std::invalid_argument("smw_precision: sigma_f_inv must be KxK");
    }
    if (K == 0) {
        return symmetrize(omega);
    }
    Matrix omegaB = omega * B;                            // p x K
    Matrix inner = sigma_f_inv + B.transpose() * omegaB;  // K x K
    Eigen::FullPivLU<Matrix> lu(inner);
    if (!lu.isInvertible()) {
        std::ostringstream msg;
        msg << "smw_precision: inner KxK matrix is singular (condition number ~ "
            << condition_number(inner) << ")";
        throw std::runtime_error(msg.str());
    }
    Matrix result = omega - omegaB * lu.solve(omegaB.transpose());
    return symmetrize(result);
}

Matrix symmetrize(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("symmetrize: matrix must be square");
    }
    return 0.5 * (M + M.transpose());
}

Matrix invert_spd(const Matrix& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("invert_spd: matrix must be square");
    }
    Eigen::LLT<Matrix> llt(symmetrize(M));
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error(
            "invert_spd: matrix is not positive definite (Cholesky failed); "
            "refusing pseudo-inverse fallback");
    }
    return symmetrize(llt.solve(Matrix::Identity(M.rows(), M.cols())));
}

double condition_number(const Matrix& M) {
    Eigen::JacobiSVD<Matrix> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sv(0) / sv(sv.size() - 1);
}

double min_eigenvalue(const Matrix& symmetricM) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(symmetricM),
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace covlab
