#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cointkit {

/// Calendar month; month is 1..12.
struct YearMonth {
    int year = 2000;
    int month = 1;

    [[nodiscard]] YearMonth plus_months(int count) const noexcept;
    [[nodiscard]] int months_since(const YearMonth& earlier) const noexcept;
    [[nodiscard]] std::string to_string() const;  // "YYYY-MM"

    /// Parses "YYYY-MM"; throws Error(Parse) otherwise.
    static YearMonth parse(std::string_view text);

    friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

/// Named, monthly-indexed sequence of finite observations.
///
/// Immutable after construction. Derived series produced by the transforms
/// below carry a start month shifted by the number of observations consumed.
class TimeSeries {
public:
    /// Throws Error(InvalidInput) on an empty sequence or a non-finite value.
    TimeSeries(std::string name, YearMonth start, std::vector<double> values);

    /// Abstract index (start 2000-01) for series with no calendar meaning.
    explicit TimeSeries(std::vector<double> values);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] YearMonth start() const noexcept { return start_; }
    [[nodiscard]] YearMonth end() const noexcept { return start_.plus_months(static_cast<int>(values_.size()) - 1); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

    [[nodiscard]] TimeSeries renamed(std::string name) const;

private:
    std::string name_;
    YearMonth start_;
    std::vector<double> values_;
};

/// s[t+1] - s[t]; length T-1, start advanced one month.
[[nodiscard]] TimeSeries first_difference(const TimeSeries& s);

/// Year-over-year style difference s[t+period] - s[t]; length T-period.
[[nodiscard]] TimeSeries seasonal_difference(const TimeSeries& s, std::size_t period = 12);

/// first_difference applied `order` times. Not the same operator as
/// seasonal_difference(s, order) for order > 1.
[[nodiscard]] TimeSeries iterated_difference(const TimeSeries& s, std::size_t order);

/// Elementwise natural log; Error(Domain) naming the first index with value <= 0.
[[nodiscard]] TimeSeries log_transform(const TimeSeries& s);

}  // namespace cointkit
