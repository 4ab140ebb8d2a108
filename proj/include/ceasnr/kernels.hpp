// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace cea::kernels {

// Elementwise waveform kernels. The default entry points parallelize with
// OpenMP when built with it; the serial:: variants are the reference
// implementations. Each output element depends only on its own index, so
// both paths produce bit-identical results.

// out[i] = amplitude * sin(2*pi*freq_hz*i/fs + phase_rad)
void fill_sine(std::span<double> out, double amplitude, double freq_hz, double phase_rad,
               double sample_rate_hz);

// out[i] = gain * (a[i] + b[i])
void mix_scaled(std::span<double> out, std::span<const double> a, std::span<const double> b,
                double gain);

// out[i] = gain * a[i]
void scale(std::span<double> out, std::span<const double> a, double gain);

namespace serial {
void fill_sine(std::span<double> out, double amplitude, double freq_hz, double phase_rad,
               double sample_rate_hz);
void mix_scaled(std::span<double> out, std::span<const double> a, std::span<const double> b,
                double gain);
void scale(std::span<double> out, std::span<const double> a, double gain);
}  // namespace serial

}  // namespace cea::kernels
