#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cointkit/ols.hpp"
#include "cointkit/series.hpp"
#include "cointkit/unitroot.hpp"

namespace cointkit::coint {

enum class Variant { Levels, FirstDifferences };
enum class Transform { Raw, Log };

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(Transform t) noexcept;

struct EngleGrangerOptions {
    std::size_t lags = 0;
    /// Linear trend in the cointegrating (stage-1) regression; switches the
    /// critical values to the constant-and-trend surface.
    bool trend = false;
    /// Stage-1 intercept. Without it the constant-case surface is still used.
    bool stage1_intercept = true;
    /// Label only: records whether the caller log-transformed the inputs.
    Transform transform = Transform::Raw;
};

struct CointegrationReport {
    std::string y_name;
    std::string x_name;
    ols::RegressionFit first_stage;
    unitroot::UnitRootReport second_stage;  // computed from first_stage.residuals only
    /// Rejection of "no cointegration" at 1%, 5%, 10%; absent when the
    /// second-stage sample is too small for the response surfaces.
    std::optional<std::array<bool, 3>> rejects;
    Variant variant = Variant::Levels;
    Transform transform = Transform::Raw;
    EngleGrangerOptions options;

    [[nodiscard]] double statistic() const noexcept { return second_stage.statistic; }
    [[nodiscard]] std::size_t nobs() const noexcept { return second_stage.nobs; }
};

/// Engle-Granger residual-based test.
///
/// Stage 1 regresses y on x (intercept by default, trend on request). Stage 2
/// runs a (augmented) Dickey-Fuller regression on the stage-1 residuals with no
/// deterministic terms. The statistic is graded on the N=2 surfaces at the
/// stage-2 sample size T - 1 - lags.
///
/// Errors: Error(InvalidInput) on a length mismatch; otherwise whatever the
/// regressions raise (InsufficientObservations, Singular).
[[nodiscard]] CointegrationReport engle_granger(const TimeSeries& y, const TimeSeries& x,
                                                const EngleGrangerOptions& options);

[[nodiscard]] inline CointegrationReport engle_granger(const TimeSeries& y, const TimeSeries& x, std::size_t lags,
                                                       bool trend) {
    EngleGrangerOptions opts;
    opts.lags = lags;
    opts.trend = trend;
    return engle_granger(y, x, opts);
}

/// Engle-Granger applied to first differences (lags 0, no trend). This is the
/// misspecified variant: differences of I(1) series are already stationary, so
/// it rejects "no cointegration" with probability tending to one.
[[nodiscard]] CointegrationReport bahar_hausmann(const TimeSeries& y, const TimeSeries& x,
                                                 Transform transform = Transform::Raw);

}  // namespace cointkit::coint
