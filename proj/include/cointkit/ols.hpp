#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cointkit::ols {

struct Regressor {
    std::string name;
    std::vector<double> values;
};

/// Regressor set for a single OLS fit.
///
/// The trend term takes the values 1, 2, ..., n over the regression sample.
/// Coefficients in the resulting fit are ordered: columns (as given), then
/// the trend if requested, then the intercept if requested.
struct DesignSpec {
    bool intercept = true;
    bool trend = false;
    std::vector<Regressor> columns;

    [[nodiscard]] std::size_t regressor_count() const noexcept {
        return columns.size() + (intercept ? 1 : 0) + (trend ? 1 : 0);
    }
};

inline constexpr std::string_view kInterceptName = "_cons";
inline constexpr std::string_view kTrendName = "_trend";

struct RegressionFit {
    std::vector<std::string> names;
    std::vector<double> coefficients;
    std::vector<double> standard_errors;
    std::vector<double> t_statistics;
    std::vector<double> p_values;  // two-sided, Student-t with dof degrees of freedom
    std::vector<double> residuals;
    std::size_t nobs = 0;
    std::size_t dof = 0;
    double ssr = 0.0;
    double sigma2 = 0.0;  // ssr / dof

    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws Error(InvalidInput) when the name is not a regressor of this fit.
    [[nodiscard]] std::size_t require_index(std::string_view name) const;
};

/// Relative tolerance on |R_jj| / ||x_j|| below which the design is treated
/// as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Least squares via Householder QR.
///
/// Errors: Error(InvalidInput) for empty designs, ragged or non-finite
/// columns; Error(InsufficientObservations) when n <= k; Error(Singular) when
/// the design does not have full column rank.
[[nodiscard]] RegressionFit fit(std::span<const double> y, const DesignSpec& design);

/// Two-sided Student-t tail probability P(|T_dof| > |t|).
[[nodiscard]] double two_sided_p_value(double t, std::size_t dof);

}  // namespace cointkit::ols
