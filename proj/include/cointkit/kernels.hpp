#pragma once

// Data-parallel arithmetic used by the regression and spectral code.
//
// Each kernel has a scalar reference implementation plus vector variants
// (AVX2+FMA on x86-64, NEON on AArch64). The variant is chosen once at first
// use from CPU feature detection; the COINTKIT_SIMD environment variable
// (scalar | avx2 | neon) overrides the choice. Vector variants reassociate
// sums, so results agree with the scalar reference to rounding, not bitwise.

#include <cstddef>
#include <span>
#include <string_view>

namespace cointkit::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    double (*sum_squares)(const double* x, std::size_t n);
};

[[nodiscard]] bool isa_available(Isa isa) noexcept;
[[nodiscard]] Isa detect_best_isa() noexcept;
[[nodiscard]] Isa active_isa() noexcept;

// Throws Error(Configuration) when the ISA is not compiled in or not
// supported by the running CPU.
void set_isa(Isa isa);

[[nodiscard]] const KernelTable& table_for(Isa isa);
[[nodiscard]] const KernelTable& active();

[[nodiscard]] inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    active().axpy(alpha, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

[[nodiscard]] inline double sum(std::span<const double> x) {
    return active().sum(x.data(), x.size());
}

[[nodiscard]] inline double sum_squares(std::span<const double> x) {
    return active().sum_squares(x.data(), x.size());
}

}  // namespace cointkit::kernels
