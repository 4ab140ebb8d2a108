// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cea::filters {

enum class FilterFamily { kButterworth, kChebyshev1, kChebyshev2, kElliptic };

std::string family_name(FilterFamily family);
FilterFamily family_from_name(std::string_view name);  // throws std::domain_error

struct FilterSpec {
  FilterFamily family = FilterFamily::kButterworth;
  int order = 1;
  double cutoff_hz = 600.0;
  double passband_ripple_db = 0.0;  // Rp; required > 0 for Chebyshev I and elliptic
  double stopband_atten_db = 0.0;   // Rs; required > 0 for Chebyshev II and elliptic
  double sample_rate_hz = 100e3;
};

// Continuous-time design H(s) = gain * prod(s - z_i) / prod(s - p_j).
// Prototypes are normalized to a 1 rad/s band edge (the family's own edge:
// -3 dB for Butterworth, ripple edge for Chebyshev I / elliptic, stopband
// edge for Chebyshev II).
struct AnalogPrototype {
  std::vector<std::complex<double>> zeros;
  std::vector<std::complex<double>> poles;
  double gain = 1.0;
};

// One second-order section of H(z) =
//   (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2).
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

struct DigitalFilter {
  std::vector<Biquad> sections;
  double overall_gain = 1.0;
};

AnalogPrototype butterworth_prototype(int order);
AnalogPrototype chebyshev1_prototype(int order, double passband_ripple_db);
AnalogPrototype chebyshev2_prototype(int order, double stopband_atten_db);
AnalogPrototype elliptic_prototype(int order, double passband_ripple_db,
                                   double stopband_atten_db);

// Frequency scaling s -> s / cutoff_rad_s; preserves the DC gain.
AnalogPrototype lowpass_scale(const AnalogPrototype& proto, double cutoff_rad_s);

// Prewarped bilinear transform. The analog design is taken to have its band
// edge at 2*pi*prewarp_hz rad/s; the mapping is adjusted so the digital
// response at prewarp_hz equals the analog response at that edge.
DigitalFilter bilinear(const AnalogPrototype& analog, double sample_rate_hz, double prewarp_hz);

// prototype -> lowpass_scale -> bilinear, per the spec'd family.
DigitalFilter design(const FilterSpec& spec);

// H(s) evaluated at s = j*omega.
std::complex<double> analog_response(const AnalogPrototype& proto, double omega_rad_s);

// Cascade response at freq_hz in [0, fs/2].
std::complex<double> frequency_response(const DigitalFilter& filter, double freq_hz,
                                        double sample_rate_hz);

// Runs the cascade (direct form II transposed, zero initial state) over the
// samples. Throws on non-finite input.
std::vector<double> apply(const DigitalFilter& filter, std::span<const double> samples);

// Equivalent noise bandwidth (1/|H|peak^2) * integral of |H(f)|^2 over
// [0, fs/2], by adaptive quadrature to 1e-6 relative tolerance.
double equivalent_noise_bandwidth(const DigitalFilter& filter, double sample_rate_hz);

// Samples until the slowest section envelope decays to 1e-6:
// ceil(-ln(1e-6) / (1 - r_max)) with r_max the largest pole radius.
std::size_t transient_samples(const DigitalFilter& filter);

// Stability-triangle check on every section: |a2| < 1 and |a1| < 1 + a2.
bool is_stable(const DigitalFilter& filter);

// Plain-text export: one "b0 b1 b2 a1 a2" line per section, then the overall
// gain on its own line.
std::string coefficient_dump(const DigitalFilter& filter);

}  // namespace cea::filters
