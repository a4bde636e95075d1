#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cointkit/series.hpp"

namespace cointkit::dataio {

inline constexpr std::string_view kDateColumn = "date";
inline constexpr std::array<std::string_view, 4> kValueColumns{"encounters", "oil_income", "oil_price",
                                                                "oil_production"};

/// Replication archive for the empirical tables (Harvard Dataverse).
inline constexpr std::string_view kArchiveIdentifier = "doi:10.7910/DVN/68B17U";

/// Monthly dataset: four strictly positive series on consecutive months.
struct Dataset {
    YearMonth start;
    std::vector<TimeSeries> series;  // in kValueColumns order
    std::string hash;                // FNV-1a 64 of the source bytes, hex

    [[nodiscard]] std::size_t rows() const noexcept { return series.empty() ? 0 : series.front().size(); }
    /// Error(Schema) naming the column when it is not one of kValueColumns.
    [[nodiscard]] const TimeSeries& column(std::string_view name) const;
};

struct LoadOptions {
    /// canonical column name -> header used in the file
    std::map<std::string, std::string, std::less<>> column_map;
};

/// Parses the CSV schema `date,encounters,oil_income,oil_price,oil_production`
/// (YYYY-MM dates, any row order, extra columns ignored).
///
/// Errors: Error(Schema) for a missing column; Error(Parse) for an
/// unparseable cell with line and column; Error(Domain) for a non-positive
/// value; Error(Continuity) naming the first missing or duplicated month.
[[nodiscard]] Dataset load_csv(std::istream& in, const LoadOptions& options = {});
[[nodiscard]] Dataset load_csv_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Canonical CSV with values in shortest round-trip form.
[[nodiscard]] std::string write_csv(const Dataset& d);

struct ConsistencyReport {
    double tolerance = 0.0;
    std::vector<double> ratios;  // oil_income / (oil_price * oil_production), per row
    std::vector<std::size_t> flagged_rows;
    double median_ratio = 0.0;
    /// every ratio within `tolerance` (relative) of the median
    bool common_ratio = false;
};

/// Flags rows where |income - price*production| / income > tolerance.
/// Informational: units may differ by a constant factor, which is reported.
[[nodiscard]] ConsistencyReport consistency_check(const Dataset& d, double tolerance);

[[nodiscard]] std::string fnv1a64_hex(std::string_view bytes);

}  // namespace cointkit::dataio
