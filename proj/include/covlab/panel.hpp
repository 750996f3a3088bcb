#pragma once

#include "covlab/types.hpp"

#include <string>
#include <vector>

namespace covlab {

/// Dated T x p matrix of simple excess returns (decimal per month).
/// Immutable after load; dates are normalized YYYY-MM labels, strictly
/// increasing, and the panel has no missing cells.
struct ReturnsPanel {
    std::vector<std::string> dates;
    std::vector<std::string> assets;
    Matrix values;  // T x p

    Index periods() const { return values.rows(); }
    Index assetCount() const { return values.cols(); }
};

/// Dated T x K matrix of observed factor values.
struct FactorPanel {
    std::vector<std::string> dates;
    std::vector<std::string> factors;
    Matrix values;  // T x K
};

/// Two-column date,rf series.
struct RiskFreeSeries {
    std::vector<std::string> dates;
    Vector values;
};

ReturnsPanel load_returns(const std::string& path);
FactorPanel load_factors(const std::string& path);
RiskFreeSeries load_riskfree(const std::string& path);

void save_returns_csv(const ReturnsPanel& panel, const std::string& path);
void save_factors_csv(const FactorPanel& panel, const std::string& path);
void save_matrix_csv(const Matrix& M, const std::vector<std::string>& labels,
                     const std::string& path);
Matrix load_matrix_csv(const std::string& path);

/// Subtracts the risk-free rate from every asset return, matching on date.
/// Every panel date must be present in the series.
ReturnsPanel to_excess(const ReturnsPanel& returns, const RiskFreeSeries& riskfree);

/// Restricts a factor panel to the dates of a returns panel, in order.
/// Throws if any panel date is missing from the factors.
FactorPanel align_factors(const ReturnsPanel& returns, const FactorPanel& factors);

/// One rolling estimation window: trains on rows [trainStart, trainEnd],
/// evaluates on the single row testIndex = trainEnd + 1. Read-only
/// projection of the parent panels.
struct WindowView {
    Index trainStart = 0;
    Index trainEnd = 0;   // inclusive
    Index testIndex = 0;  // == trainEnd + 1
    const ReturnsPanel* returns = nullptr;
    const FactorPanel* factors = nullptr;  // nullptr when no factors supplied

    Index length() const { return trainEnd - trainStart + 1; }
    auto trainReturns() const {
        return returns->values.middleRows(trainStart, length());
    }
    Vector testReturns() const { return returns->values.row(testIndex).transpose(); }
    /// Training factors as K x T_I (observed-factor estimator convention).
    Matrix trainFactorsKxT() const {
        return factors->values.middleRows(trainStart, length()).transpose();
    }
    const std::string& testDate() const { return returns->dates[testIndex]; }
};

/// Exactly T - windowLen windows; window i trains on rows [i, i+windowLen)
/// and tests on row i+windowLen. Throws "insufficient history" when T <= windowLen.
std::vector<WindowView> rolling_windows(const ReturnsPanel& returns,
                                        const FactorPanel* factors, Index windowLen);

/// Normalizes a date label to YYYY-MM (accepts YYYY-MM or YYYY-MM-DD).
std::string normalize_date(const std::string& raw);

}  // namespace covlab
