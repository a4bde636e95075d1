#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cointkit/critvals.hpp"

namespace cointkit::diagnostics {

/// Bartlett cumulative-periodogram white-noise test.
struct BartlettReport {
    double statistic = 0.0;  // B = max_j sqrt(q) |U_j - j/q|
    double p_value = 1.0;
    std::size_t n = 0;
    std::size_t q = 0;               // floor((n-1)/2) harmonic frequencies
    std::vector<double> cumulative;  // U_1..U_q, U_q == 1

    /// Significance from the Kolmogorov tail probability.
    [[nodiscard]] critvals::Grade grade() const noexcept;
};

inline constexpr std::size_t kBartlettMinObservations = 8;

/// Periodogram ordinates at w_j = 2*pi*j/n for j = 1..floor((n-1)/2), by
/// direct summation over the demeaned input.
[[nodiscard]] std::vector<double> periodogram(std::span<const double> x);

/// Errors: Error(InsufficientObservations) for n < 8; Error(Degenerate) for a
/// constant input.
[[nodiscard]] BartlettReport bartlett_test(std::span<const double> x);

/// Kolmogorov tail 2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 B^2), clamped to
/// [0, 1]. The alternating series is truncated once a term falls below 1e-10;
/// below B = 0.3 the equivalent theta-function form is used instead.
[[nodiscard]] double bartlett_p_value(double statistic) noexcept;

}  // namespace cointkit::diagnostics
