#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "cointkit/critvals.hpp"
#include "cointkit/ols.hpp"
#include "cointkit/series.hpp"

namespace cointkit::unitroot {

struct UnitRootConfig {
    std::size_t lags = 0;  // lagged differences added to the test regression
    Deterministic deterministic = Deterministic::Constant;
};

/// Which response surface grades the statistic. Residual-based tests run the
/// regression without deterministic terms but are graded on the N=2 tables.
struct GradingTable {
    int n_variables = 1;
    Deterministic deterministic = Deterministic::Constant;
};

inline constexpr std::string_view kLaggedLevelName = "L.level";

struct UnitRootReport {
    double statistic = 0.0;  // t-statistic on the lagged level
    std::size_t nobs = 0;    // T - 1 - lags
    UnitRootConfig config;
    GradingTable table;
    /// 1%, 5%, 10%; absent when nobs is below the smallest sample the
    /// response surfaces serve.
    std::optional<std::array<double, 3>> critical_values;
    critvals::Grade grade = critvals::Grade::None;
    ols::RegressionFit regression;
};

/// (Augmented) Dickey-Fuller test.
///
/// Regresses dY_t on Y_{t-1}, dY_{t-1}..dY_{t-lags} and the configured
/// deterministic terms over t = lags+2..T, so nobs = T - 1 - lags. A statistic
/// near zero is consistent with a unit root.
///
/// Errors: Error(InsufficientObservations) naming required vs available
/// observations; Error(Singular) from the regression.
[[nodiscard]] UnitRootReport df_test(std::span<const double> values, const UnitRootConfig& config,
                                     std::optional<GradingTable> table = std::nullopt);

[[nodiscard]] inline UnitRootReport df_test(const TimeSeries& s, const UnitRootConfig& config,
                                            std::optional<GradingTable> table = std::nullopt) {
    return df_test(s.values(), config, table);
}

}  // namespace cointkit::unitroot
