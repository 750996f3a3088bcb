#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>

namespace covlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// A precision-matrix estimate together with the covariance it was derived
/// from (when one exists) and the tuning values that produced it.
///
/// Nodewise-style estimators build the precision matrix directly and never
/// define a covariance; for those `cov` is absent rather than obtained by
/// inverting a possibly indefinite precision matrix.
struct CovarianceEstimate {
    std::optional<Matrix> cov;
    Matrix precision;
    std::string method;
    std::map<std::string, double> tuning;
};

}  // namespace covlab
