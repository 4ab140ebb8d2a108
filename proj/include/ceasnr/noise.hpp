// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cea::noise {

struct ThermalNoiseSpec {
  double resistance_ohm = 10e3;
  double temperature_kelvin = 300.0;
  double bandwidth_hz = 10e3;
};

struct ShotNoiseSpec {
  double base_current_amp = 10e-6;
  double bandwidth_hz = 10e3;
};

// Fixed-bias approximation of the base circuit: I_B = (Vcc - Vbe) / Rb.
struct BiasModel {
  double vcc_volt = 12.0;
  double vbe_volt = 0.7;
  double base_resistor_ohm = 1.13e6;
};

// Johnson-Nyquist RMS voltage sqrt(4 k T R B).
double thermal_noise_rms(const ThermalNoiseSpec& spec);

// Shot-noise RMS current sqrt(2 q I_B W).
double shot_noise_rms(const ShotNoiseSpec& spec);

// One-sided thermal PSD 4 k T R, in V^2/Hz. thermal_noise_rms(R,T,B)^2 ==
// thermal_psd_onesided(R,T) * B for any B >= 0.
double thermal_psd_onesided(double resistance_ohm, double temperature_kelvin);

double base_current_from_bias(const BiasModel& bias);

// White Gaussian voltage samples whose one-sided PSD equals 4kTR over
// [0, fs/2], i.e. per-sample variance 4kTR * fs/2. Band-limiting the stream
// to any B <= fs/2 therefore leaves an RMS of sqrt(4kTRB). Deterministic for
// a fixed seed.
std::vector<double> gen_thermal_noise(double resistance_ohm,
                                      double temperature_kelvin,
                                      double sample_rate_hz,
                                      std::size_t n_samples,
                                      std::uint64_t seed);

}  // namespace cea::noise
