// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ceasnr/noise.hpp"

namespace cea::amp {

struct SourceSpec {
  double frequency_hz = 50.0;
  double amplitude_volt = 1e-3;  // peak
  double phase_rad = 0.0;
};

struct AmplifierSpec {
  double voltage_gain = 100.0;
};

// s[i] = A * sin(2*pi*f*i/fs + phase). Requires fs > 2f.
std::vector<double> gen_source(const SourceSpec& src, double sample_rate_hz,
                               std::size_t n_samples);

// Base-referred noise scaled to the output: gain * base RMS.
double output_noise_rms(double base_noise_rms_volt, const AmplifierSpec& amp);

struct ChainOutput {
  std::vector<double> clean_output;
  std::vector<double> noisy_output;
};

// Ideal gain stage: clean = gain * source, noisy = gain * (source + base
// thermal noise). The noise bandwidth is fs/2 by construction (white over
// the sampled band); base_noise.bandwidth_hz is not consulted here.
ChainOutput synthesize_chain(const SourceSpec& src, const AmplifierSpec& amp,
                             const noise::ThermalNoiseSpec& base_noise, double sample_rate_hz,
                             std::size_t n_samples, std::uint64_t seed);

}  // namespace cea::amp
