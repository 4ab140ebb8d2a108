// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace cea::snr {

enum class TransientMode { kDiscard, kInclude };

// transient_mode selects which window of a filtered record the caller
// measures (discard drops the filter warm-up before estimating); the
// estimator itself fits whatever samples it is handed.
struct SnrMeasurementPolicy {
  TransientMode transient_mode = TransientMode::kDiscard;
  int min_periods = 50;
};

struct SnrReport {
  double snr_before_db = 0.0;
  double snr_after_db = 0.0;
  double improvement_db = 0.0;
  int trials = 0;
  double ci_halfwidth_db = 0.0;
};

// Returned instead of +inf when the residual is numerically zero.
inline constexpr double kSnrCapDb = 200.0;

// Known-frequency SNR estimate: least-squares fit of a*sin + b*cos + c over
// an integer number of periods; signal power (a^2+b^2)/2, noise power the
// mean squared residual. Returns dB, capped at +/- kSnrCapDb.
double estimate_snr(std::span<const double> samples, double signal_freq_hz,
                    double sample_rate_hz, const SnrMeasurementPolicy& policy = {});

double improvement(double before_db, double after_db);

}  // namespace cea::snr
