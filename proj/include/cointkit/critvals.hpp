#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace cointkit {

enum class Deterministic { None, Constant, ConstantTrend };

std::string_view to_string(Deterministic d) noexcept;

}  // namespace cointkit

namespace cointkit::critvals {

enum class Level { OnePercent, FivePercent, TenPercent };

inline constexpr std::array<Level, 3> kLevels{Level::OnePercent, Level::FivePercent, Level::TenPercent};

std::string_view to_string(Level level) noexcept;

/// Strongest level at which the null is rejected.
enum class Grade { None, TenPercent, FivePercent, OnePercent };

/// "***", "**", "*" or "".
std::string_view stars(Grade grade) noexcept;

/// C(T) = beta_inf + beta_1/T + beta_2/T^2 + beta_3/T^3.
struct ResponseSurface {
    double beta_inf;
    double beta_1;
    double beta_2;
    double beta_3;

    [[nodiscard]] double at(double sample_size) const noexcept;
};

struct TestContext {
    int n_variables = 1;  // 1: unit root, 2: one-regressor cointegration
    Deterministic deterministic = Deterministic::Constant;
    Level level = Level::FivePercent;
    std::size_t effective_T = 0;
};

inline constexpr std::size_t kMinEffectiveT = 20;

/// Error(Configuration) for a cell with no published surface.
[[nodiscard]] const ResponseSurface& response_surface(int n_variables, Deterministic deterministic, Level level);

/// Error(UnsupportedSample) when effective_T < kMinEffectiveT.
[[nodiscard]] double critical_value(const TestContext& ctx);

/// 1%, 5%, 10% critical values in that order.
[[nodiscard]] std::array<double, 3> critical_values(int n_variables, Deterministic deterministic,
                                                    std::size_t effective_T);

[[nodiscard]] Grade grade(double statistic, int n_variables, Deterministic deterministic, std::size_t effective_T);

/// Grades against already computed 1%/5%/10% thresholds.
[[nodiscard]] Grade grade(double statistic, const std::array<double, 3>& thresholds) noexcept;

}  // namespace cointkit::critvals
