// SPDX-License-Identifier: Apache-2.0
#include "ceasnr/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "ceasnr/constants.hpp"
#include "ceasnr/rng.hpp"

namespace cea::noise {

namespace {

void check_thermal(double r, double t) {
  if (!(r >= 0.0)) throw std::domain_error("thermal noise: resistance_ohm must be >= 0");
  if (!(t > 0.0)) throw std::domain_error("thermal noise: temperature_kelvin must be > 0");
}

}  // namespace

double thermal_noise_rms(const ThermalNoiseSpec& spec) {
  check_thermal(spec.resistance_ohm, spec.temperature_kelvin);
  if (!(spec.bandwidth_hz >= 0.0)) throw std::domain_error("thermal noise: bandwidth_hz must be >= 0");
  return std::sqrt(4.0 * kBoltzmann * spec.temperature_kelvin * spec.resistance_ohm *
                   spec.bandwidth_hz);
}

double shot_noise_rms(const ShotNoiseSpec& spec) {
  if (!(spec.base_current_amp >= 0.0)) throw std::domain_error("shot noise: base_current_amp must be >= 0");
  if (!(spec.bandwidth_hz >= 0.0)) throw std::domain_error("shot noise: bandwidth_hz must be >= 0");
  return std::sqrt(2.0 * kElectronCharge * spec.base_current_amp * spec.bandwidth_hz);
}

double thermal_psd_onesided(double resistance_ohm, double temperature_kelvin) {
  check_thermal(resistance_ohm, temperature_kelvin);
  return 4.0 * kBoltzmann * temperature_kelvin * resistance_ohm;
}

double base_current_from_bias(const BiasModel& bias) {
  if (!(bias.base_resistor_ohm > 0.0)) throw std::domain_error("bias: base_resistor_ohm must be > 0");
  if (!(bias.vcc_volt > bias.vbe_volt)) throw std::domain_error("bias: vcc_volt must exceed vbe_volt");
  return (bias.vcc_volt - bias.vbe_volt) / bias.base_resistor_ohm;
}

std::vector<double> gen_thermal_noise(double resistance_ohm, double temperature_kelvin,
                                      double sample_rate_hz, std::size_t n_samples,
                                      std::uint64_t seed) {
  check_thermal(resistance_ohm, temperature_kelvin);
  if (!(sample_rate_hz > 0.0)) throw std::domain_error("gen_thermal_noise: sample_rate_hz must be > 0");
  const double sigma =
      std::sqrt(thermal_psd_onesided(resistance_ohm, temperature_kelvin) * sample_rate_hz / 2.0);
  std::vector<double> out(n_samples);
  rng::GaussianStream stream(seed);
  for (double& x : out) x = sigma * stream.next();
  return out;
}

}  // namespace cea::noise
