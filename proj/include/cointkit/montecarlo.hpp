#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cointkit/critvals.hpp"
#include "cointkit/series.hpp"

namespace cointkit::mc {

/// splitmix64 finalizer (Steele, Lea & Flood 2014).
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of replication `index`: splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
[[nodiscard]] constexpr std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// std::mt19937_64 with 53-bit uniforms and Box-Muller normals.
///
/// u = ((draw >> 11) + 0.5) * 2^-53 lies strictly inside (0, 1). Each
/// Box-Muller step consumes two uniforms u1, u2 and yields
/// r*cos(2*pi*u2) followed by r*sin(2*pi*u2), r = sqrt(-2 ln u1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    [[nodiscard]] double uniform() noexcept;
    [[nodiscard]] double normal() noexcept;

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Two independent driftless Gaussian random walks of length T starting at 0.
/// Draws the T-1 innovations of x, then the T-1 innovations of y.
[[nodiscard]] std::pair<TimeSeries, TimeSeries> simulate_random_walk_pair(std::size_t T, Rng& rng);

struct McConfig {
    std::size_t replications = 1000;
    std::size_t T = 48;
    std::uint64_t seed = 42;
    critvals::Level level = critvals::Level::FivePercent;
    unsigned threads = 0;  // 0: hardware concurrency, 1: serial
};

inline constexpr double kHistogramLow = -12.0;
inline constexpr double kHistogramHigh = 2.0;
inline constexpr double kHistogramWidth = 0.5;
inline constexpr std::size_t kHistogramBins = 28;

struct ArmSummary {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation of the statistics
    double rejection_rate = 0.0;
    std::size_t rejections = 0;
    std::size_t valid = 0;
    std::size_t degenerate = 0;
    std::size_t effective_T = 0;
    double critical_value = 0.0;
    std::vector<double> statistics;             // valid replications, by index
    std::vector<std::size_t> degenerate_indices;
    std::vector<std::size_t> histogram;         // kHistogramBins counts
};

struct McSummary {
    McConfig config;
    ArmSummary levels;
    ArmSummary differences;
};

/// Engle-Granger on levels and on first differences for every replication.
///
/// Replications may run on several threads; results are collected by
/// replication index and summarized serially, so the summary depends only on
/// the config (thread count excluded). Degenerate replications are counted
/// and excluded from the moments and the rejection rate.
///
/// Errors: Error(InvalidInput) when replications == 0 or T < 10;
/// Error(UnsupportedSample) when T - 2 is below the smallest sample the
/// critical-value surfaces serve.
[[nodiscard]] McSummary run_experiment(const McConfig& config);

/// run_experiment for each T with the same seed, replications and level.
[[nodiscard]] std::vector<McSummary> sample_size_sweep(std::span<const std::size_t> sample_sizes,
                                                        std::size_t replications, std::uint64_t seed,
                                                        critvals::Level level = critvals::Level::FivePercent,
                                                        unsigned threads = 0);

/// Histogram bin index for a statistic; out-of-range values clamp to the
/// edge bins.
[[nodiscard]] std::size_t histogram_bin(double statistic) noexcept;

/// CSV with header bin_lo,bin_hi,count_levels,count_diffs.
[[nodiscard]] std::string histogram_csv(const McSummary& summary);

}  // namespace cointkit::mc
