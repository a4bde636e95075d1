#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cointkit/dataio.hpp"
#include "cointkit/montecarlo.hpp"
#include "cointkit/tables.hpp"

namespace cointkit::replication {

enum class TableId { MonteCarlo, EgLog, FirstStage, EgRaw, DfLog, DfRaw };

/// "1", "2", "A1", "A2", "A3", "A4" (case-insensitive); Error(Configuration)
/// otherwise.
[[nodiscard]] TableId parse_table_id(std::string_view text);
[[nodiscard]] std::string_view table_label(TableId id) noexcept;
[[nodiscard]] bool needs_dataset(TableId id) noexcept;

/// Monte Carlo summary in the layout of the published simulation table.
[[nodiscard]] tables::Table monte_carlo_table(const mc::McSummary& summary);

/// One row per sample size with both arms' mean, SD and rejection rate.
[[nodiscard]] tables::Table sweep_table(std::span<const mc::McSummary> sweep);

/// Engle-Granger battery: encounters on each oil measure, for
/// EG / AEG(12) / AEG(12)+trend, with Bartlett statistics of the stage-2
/// regression residuals. `log_transform` selects the logarithmic table.
[[nodiscard]] tables::Table engle_granger_table(const dataio::Dataset& data, bool log_transform);

/// First-difference Engle-Granger of encounters on oil income with the stage-1
/// coefficient, standard error and p-value.
[[nodiscard]] tables::Table first_stage_table(const dataio::Dataset& data);

/// DF / ADF(12) / ADF(12)+trend on all four series.
[[nodiscard]] tables::Table dickey_fuller_table(const dataio::Dataset& data, bool log_transform);

[[nodiscard]] tables::Table build_empirical(TableId id, const dataio::Dataset& data);

struct CheckLine {
    std::string description;
    bool pass = false;
    std::string detail;
};

struct CheckResult {
    std::vector<CheckLine> lines;
    [[nodiscard]] bool passed() const noexcept;
};

/// Compares a built table against the published values with the acceptance
/// tolerances: statistics +-0.01, stage-1 estimates and Z(t) +-0.005,
/// Bartlett +-0.05, observation counts exact, stars exact for unit-root and
/// cointegration statistics. The simulation table is checked against bands.
[[nodiscard]] CheckResult check(TableId id, const tables::Table& table);

}  // namespace cointkit::replication
