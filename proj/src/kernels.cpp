// SPDX-License-Identifier: Apache-2.0
#include "ceasnr/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace cea::kernels {

namespace {
// Below this length the threading overhead exceeds the loop cost.
constexpr std::ptrdiff_t kParallelGrain = 1 << 14;

void check_same_size(std::size_t out, std::size_t a, std::size_t b) {
  if (out != a || out != b) throw std::invalid_argument("kernel spans must have equal length");
}
}  // namespace

void fill_sine(std::span<double> out, double amplitude, double freq_hz, double phase_rad,
               double sample_rate_hz) {
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        amplitude * std::sin(w * static_cast<double>(i) + phase_rad);
  }
}

void mix_scaled(std::span<double> out, std::span<const double> a, std::span<const double> b,
                double gain) {
  check_same_size(out.size(), a.size(), b.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = gain * (a[k] + b[k]);
  }
}

void scale(std::span<double> out, std::span<const double> a, double gain) {
  check_same_size(out.size(), a.size(), a.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = gain * a[k];
  }
}

namespace serial {

void fill_sine(std::span<double> out, double amplitude, double freq_hz, double phase_rad,
               double sample_rate_hz) {
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = amplitude * std::sin(w * static_cast<double>(i) + phase_rad);
  }
}

void mix_scaled(std::span<double> out, std::span<const double> a, std::span<const double> b,
                double gain) {
  check_same_size(out.size(), a.size(), b.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = gain * (a[i] + b[i]);
}

void scale(std::span<double> out, std::span<const double> a, double gain) {
  check_same_size(out.size(), a.size(), a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = gain * a[i];
}

}  // namespace serial

}  // namespace cea::kernels
