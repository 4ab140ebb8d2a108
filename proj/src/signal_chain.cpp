// SPDX-License-Identifier: Apache-2.0
#include "ceasnr/signal_chain.hpp"

#include <stdexcept>

#include "ceasnr/kernels.hpp"

namespace cea::amp {

namespace {

void check_source(const SourceSpec& src, double sample_rate_hz) {
  if (!(src.frequency_hz > 0.0)) throw std::domain_error("source: frequency_hz must be > 0");
  if (!(src.amplitude_volt > 0.0)) throw std::domain_error("source: amplitude_volt must be > 0");
  if (!(sample_rate_hz > 2.0 * src.frequency_hz)) {
    throw std::domain_error("source: sample_rate_hz must exceed twice frequency_hz (Nyquist)");
  }
}

}  // namespace

std::vector<double> gen_source(const SourceSpec& src, double sample_rate_hz,
                               std::size_t n_samples) {
  check_source(src, sample_rate_hz);
  std::vector<double> out(n_samples);
  kernels::fill_sine(out, src.amplitude_volt, src.frequency_hz, src.phase_rad, sample_rate_hz);
  return out;
}

double output_noise_rms(double base_noise_rms_volt, const AmplifierSpec& amp) {
  if (!(base_noise_rms_volt >= 0.0)) throw std::domain_error("output noise: base RMS must be >= 0");
  if (!(amp.voltage_gain > 0.0)) throw std::domain_error("amplifier: voltage_gain must be > 0");
  return amp.voltage_gain * base_noise_rms_volt;
}

ChainOutput synthesize_chain(const SourceSpec& src, const AmplifierSpec& amp,
                             const noise::ThermalNoiseSpec& base_noise, double sample_rate_hz,
                             std::size_t n_samples, std::uint64_t seed) {
  check_source(src, sample_rate_hz);
  if (!(amp.voltage_gain > 0.0)) throw std::domain_error("amplifier: voltage_gain must be > 0");
  const auto source = gen_source(src, sample_rate_hz, n_samples);
  const auto noise_samples = noise::gen_thermal_noise(
      base_noise.resistance_ohm, base_noise.temperature_kelvin, sample_rate_hz, n_samples, seed);
  ChainOutput out;
  out.clean_output.resize(n_samples);
  out.noisy_output.resize(n_samples);
  kernels::scale(out.clean_output, source, amp.voltage_gain);
  kernels::mix_scaled(out.noisy_output, source, noise_samples, amp.voltage_gain);
  return out;
}

}  // namespace cea::amp
