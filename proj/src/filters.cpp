// SPDX-License-Identifier: Apache-2.0
#include "ceasnr/filters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ceasnr/elliptic.hpp"

namespace cea::filters {

namespace {

using complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_order(int order) {
  if (order < 1) throw std::domain_error("filter order must be >= 1");
}

// Product of (x - r) over a root list.
complex root_product(const std::vector<complex>& roots, complex x) {
  complex acc{1.0, 0.0};
  for (const complex& r : roots) acc *= x - r;
  return acc;
}

// Gain that sets H(0) to dc_target given the prototype roots. The ratio
// prod(-p)/prod(-z) is real and positive for conjugate-closed stable sets.
double dc_gain_for(const std::vector<complex>& zeros, const std::vector<complex>& poles,
                   double dc_target) {
  const complex ratio = root_product(poles, {0.0, 0.0}) / root_product(zeros, {0.0, 0.0});
  return dc_target * ratio.real();
}

void check_stable_prototype(const AnalogPrototype& proto) {
  for (const complex& p : proto.poles) {
    if (!(p.real() < 0.0)) throw std::logic_error("analog prototype has a non-stable pole");
  }
}

// Splits a root list into conjugate-pair representatives (imag > 0) and
// real roots. Roots are expected to be closed under conjugation.
struct RootGroups {
  std::vector<complex> pairs;
  std::vector<double> reals;
};

RootGroups group_conjugates(std::vector<complex> roots) {
  constexpr double kTol = 1e-8;
  RootGroups g;
  while (!roots.empty()) {
    const complex r = roots.back();
    roots.pop_back();
    if (std::abs(r.imag()) <= kTol * (1.0 + std::abs(r))) {
      g.reals.push_back(r.real());
      continue;
    }
    std::size_t best = roots.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const double d = std::abs(roots[i] - std::conj(r));
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    if (best == roots.size() || best_dist > kTol * (1.0 + std::abs(r))) {
      throw std::logic_error("complex root without conjugate partner");
    }
    roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(best));
    g.pairs.push_back(r.imag() > 0.0 ? r : std::conj(r));
  }
  return g;
}

struct SectionRoots {
  std::vector<complex> poles;  // one or two entries
  std::vector<complex> zeros;  // zero to two entries
  double max_pole_radius = 0.0;
};

// Packs digital poles/zeros into biquad sections: conjugate pole pairs get
// whole sections, leftover real poles pair up two at a time. Zeros are then
// assigned nearest-first, starting from the least-damped section. Sections
// are finally ordered by ascending pole radius.
std::vector<SectionRoots> pack_sections(const std::vector<complex>& dig_zeros,
                                        const std::vector<complex>& dig_poles) {
  RootGroups pg = group_conjugates(dig_poles);
  RootGroups zg = group_conjugates(dig_zeros);

  std::vector<SectionRoots> sections;
  for (const complex& p : pg.pairs) {
    SectionRoots s;
    s.poles = {p, std::conj(p)};
    s.max_pole_radius = std::abs(p);
    sections.push_back(std::move(s));
  }
  std::sort(pg.reals.begin(), pg.reals.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  for (std::size_t i = 0; i + 1 < pg.reals.size(); i += 2) {
    SectionRoots s;
    s.poles = {complex{pg.reals[i], 0.0}, complex{pg.reals[i + 1], 0.0}};
    s.max_pole_radius = std::max(std::abs(pg.reals[i]), std::abs(pg.reals[i + 1]));
    sections.push_back(std::move(s));
  }
  if (pg.reals.size() % 2 == 1) {
    SectionRoots s;
    s.poles = {complex{pg.reals.back(), 0.0}};
    s.max_pole_radius = std::abs(pg.reals.back());
    sections.push_back(std::move(s));
  }

  std::sort(sections.begin(), sections.end(), [](const SectionRoots& a, const SectionRoots& b) {
    return a.max_pole_radius > b.max_pole_radius;
  });

  auto take_nearest_pair = [&zg](const complex& anchor) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zg.pairs.size(); ++i) {
      const double d = std::abs(zg.pairs[i] - anchor);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    const complex z = zg.pairs[best];
    zg.pairs.erase(zg.pairs.begin() + static_cast<std::ptrdiff_t>(best));
    return z;
  };
  auto take_nearest_real = [&zg](const complex& anchor) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zg.reals.size(); ++i) {
      const double d = std::abs(complex{zg.reals[i], 0.0} - anchor);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    const double z = zg.reals[best];
    zg.reals.erase(zg.reals.begin() + static_cast<std::ptrdiff_t>(best));
    return z;
  };

  for (SectionRoots& s : sections) {
    const complex anchor = s.poles.front();
    if (s.poles.size() == 2) {
      if (!zg.pairs.empty()) {
        const complex z = take_nearest_pair(anchor);
        s.zeros = {z, std::conj(z)};
      } else {
        for (int i = 0; i < 2 && !zg.reals.empty(); ++i) {
          s.zeros.emplace_back(take_nearest_real(anchor), 0.0);
        }
      }
    } else {
      if (!zg.reals.empty()) {
        s.zeros.emplace_back(take_nearest_real(anchor), 0.0);
      } else if (!zg.pairs.empty()) {
        throw std::logic_error("cannot place a conjugate zero pair in a first-order section");
      }
    }
  }
  if (!zg.pairs.empty() || !zg.reals.empty()) throw std::logic_error("unassigned zeros remain");

  std::sort(sections.begin(), sections.end(), [](const SectionRoots& a, const SectionRoots& b) {
    return a.max_pole_radius < b.max_pole_radius;
  });
  return sections;
}

Biquad section_coefficients(const SectionRoots& s) {
  Biquad q;
  if (s.zeros.size() == 2) {
    q.b0 = 1.0;
    q.b1 = -(s.zeros[0] + s.zeros[1]).real();
    q.b2 = (s.zeros[0] * s.zeros[1]).real();
  } else if (s.zeros.size() == 1) {
    q.b0 = 1.0;
    q.b1 = -s.zeros[0].real();
    q.b2 = 0.0;
  }
  if (s.poles.size() == 2) {
    q.a1 = -(s.poles[0] + s.poles[1]).real();
    q.a2 = (s.poles[0] * s.poles[1]).real();
  } else {
    q.a1 = -s.poles[0].real();
    q.a2 = 0.0;
  }
  return q;
}

bool section_stable(const Biquad& q) {
  return std::abs(q.a2) < 1.0 && std::abs(q.a1) < 1.0 + q.a2;
}

double section_pole_radius(const Biquad& q) {
  if (q.a1 == 0.0 && q.a2 == 0.0) return 0.0;
  const double disc = q.a1 * q.a1 - 4.0 * q.a2;
  if (disc < 0.0) return std::sqrt(q.a2);  // conjugate pair: radius^2 = a2
  const double root = std::sqrt(disc);
  return std::max(std::abs((-q.a1 + root) / 2.0), std::abs((-q.a1 - root) / 2.0));
}

// Adaptive Simpson with error-splitting recursion.
double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                        double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0) {
    throw std::runtime_error("noise-bandwidth quadrature did not converge");
  }
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

}  // namespace

std::string family_name(FilterFamily family) {
  switch (family) {
    case FilterFamily::kButterworth: return "butterworth";
    case FilterFamily::kChebyshev1: return "chebyshev1";
    case FilterFamily::kChebyshev2: return "chebyshev2";
    case FilterFamily::kElliptic: return "elliptic";
  }
  throw std::logic_error("unknown filter family");
}

FilterFamily family_from_name(std::string_view name) {
  if (name == "butterworth") return FilterFamily::kButterworth;
  if (name == "chebyshev1") return FilterFamily::kChebyshev1;
  if (name == "chebyshev2") return FilterFamily::kChebyshev2;
  if (name == "elliptic") return FilterFamily::kElliptic;
  throw std::domain_error("unknown filter family '" + std::string(name) +
                          "' (expected butterworth|chebyshev1|chebyshev2|elliptic)");
}

AnalogPrototype butterworth_prototype(int order) {
  check_order(order);
  AnalogPrototype proto;
  // Poles at exp(j*pi*(2k + N - 1) / (2N)), k = 1..N: equally spaced on the
  // left half of the unit circle.
  for (int k = 1; k <= order / 2; ++k) {
    const double angle = kPi * (2.0 * k + order - 1.0) / (2.0 * order);
    const complex p = std::polar(1.0, angle);
    proto.poles.push_back(p);
    proto.poles.push_back(std::conj(p));
  }
  if (order % 2 == 1) proto.poles.emplace_back(-1.0, 0.0);
  proto.gain = dc_gain_for(proto.zeros, proto.poles, 1.0);
  check_stable_prototype(proto);
  return proto;
}

AnalogPrototype chebyshev1_prototype(int order, double passband_ripple_db) {
  check_order(order);
  if (!(passband_ripple_db > 0.0)) throw std::domain_error("chebyshev1: passband ripple must be > 0 dB");
  const double eps = std::sqrt(std::pow(10.0, passband_ripple_db / 10.0) - 1.0);
  const double mu = std::asinh(1.0 / eps) / order;
  AnalogPrototype proto;
  for (int k = 1; k <= order / 2; ++k) {
    const double theta = kPi * (2.0 * k - 1.0) / (2.0 * order);
    const complex p{-std::sinh(mu) * std::sin(theta), std::cosh(mu) * std::cos(theta)};
    proto.poles.push_back(p);
    proto.poles.push_back(std::conj(p));
  }
  if (order % 2 == 1) proto.poles.emplace_back(-std::sinh(mu), 0.0);
  // Ripple-top convention: even orders have |H(0)| at the ripple bottom.
  const double dc = (order % 2 == 0) ? std::pow(10.0, -passband_ripple_db / 20.0) : 1.0;
  proto.gain = dc_gain_for(proto.zeros, proto.poles, dc);
  check_stable_prototype(proto);
  return proto;
}

AnalogPrototype chebyshev2_prototype(int order, double stopband_atten_db) {
  check_order(order);
  if (!(stopband_atten_db > 0.0)) throw std::domain_error("chebyshev2: stopband attenuation must be > 0 dB");
  const double eps = 1.0 / std::sqrt(std::pow(10.0, stopband_atten_db / 10.0) - 1.0);
  const double mu = std::asinh(1.0 / eps) / order;
  AnalogPrototype proto;
  // Zeros on the imaginary axis, poles the reciprocals of Chebyshev-I-style
  // poles; stopband edge normalized to 1 rad/s.
  for (int k = 1; k <= order / 2; ++k) {
    const double theta = kPi * (2.0 * k - 1.0) / (2.0 * order);
    const complex z{0.0, 1.0 / std::cos(theta)};
    proto.zeros.push_back(z);
    proto.zeros.push_back(std::conj(z));
    const complex p1{-std::sinh(mu) * std::sin(theta), std::cosh(mu) * std::cos(theta)};
    const complex p = 1.0 / p1;
    proto.poles.push_back(p);
    proto.poles.push_back(std::conj(p));
  }
  if (order % 2 == 1) proto.poles.emplace_back(-1.0 / std::sinh(mu), 0.0);
  proto.gain = dc_gain_for(proto.zeros, proto.poles, 1.0);
  check_stable_prototype(proto);
  return proto;
}

AnalogPrototype elliptic_prototype(int order, double passband_ripple_db,
                                   double stopband_atten_db) {
  check_order(order);
  if (!(passband_ripple_db > 0.0)) throw std::domain_error("elliptic: passband ripple must be > 0 dB");
  if (!(stopband_atten_db > passband_ripple_db)) {
    throw std::domain_error("elliptic: stopband attenuation must exceed passband ripple");
  }
  const double eps_p = std::sqrt(std::pow(10.0, passband_ripple_db / 10.0) - 1.0);
  const double eps_s = std::sqrt(std::pow(10.0, stopband_atten_db / 10.0) - 1.0);
  const double k1 = eps_p / eps_s;
  const double m1 = k1 * k1;
  if (!(m1 > 0.0 && m1 < 1.0)) {
    throw std::domain_error("elliptic: ripple/attenuation combination out of range");
  }
  const double big_k1 = elliptic::complete_k(m1);
  const double k1p = std::sqrt(1.0 - m1);
  const double big_k1p = elliptic::complete_k(k1p * k1p);
  const int pairs = order / 2;

  // Degree equation: solve for the selectivity modulus k given (N, k1) via
  // the sn-product form.
  double kp = 1.0;
  for (int i = 0; i < pairs; ++i) {
    const double u = (2.0 * i + 1.0) * big_k1p / order;
    kp *= elliptic::jacobi_sn(complex{u, 0.0}, k1p * k1p).real();
  }
  kp = std::pow(k1p, order) * std::pow(kp, 4);
  const double k = std::sqrt(1.0 - kp * kp);
  const double m = k * k;
  if (!(m > 0.0 && m < 1.0)) {
    throw std::domain_error("elliptic: degree equation degenerate for these parameters");
  }
  const double big_k = elliptic::complete_k(m);
  const double v0 =
      elliptic::inverse_sn(complex{0.0, 1.0 / eps_p}, m1).imag() / (order * big_k1);

  AnalogPrototype proto;
  for (int i = 0; i < pairs; ++i) {
    const double u = (2.0 * i + 1.0) * big_k / order;
    const double zeta = elliptic::jacobi_cd(complex{u, 0.0}, m).real();
    const complex zero{0.0, 1.0 / (k * zeta)};
    proto.zeros.push_back(zero);
    proto.zeros.push_back(std::conj(zero));
    const complex pole = complex{0.0, 1.0} * elliptic::jacobi_cd(complex{u, -v0 * big_k}, m);
    proto.poles.push_back(pole);
    proto.poles.push_back(std::conj(pole));
  }
  if (order % 2 == 1) {
    const complex pole = complex{0.0, 1.0} * elliptic::jacobi_sn(complex{0.0, v0 * big_k}, m);
    proto.poles.emplace_back(pole.real(), 0.0);
  }
  const double dc = (order % 2 == 0) ? std::pow(10.0, -passband_ripple_db / 20.0) : 1.0;
  proto.gain = dc_gain_for(proto.zeros, proto.poles, dc);
  check_stable_prototype(proto);
  return proto;
}

AnalogPrototype lowpass_scale(const AnalogPrototype& proto, double cutoff_rad_s) {
  if (!(cutoff_rad_s > 0.0)) throw std::domain_error("lowpass_scale: cutoff must be > 0");
  AnalogPrototype scaled;
  scaled.zeros.reserve(proto.zeros.size());
  scaled.poles.reserve(proto.poles.size());
  for (const complex& z : proto.zeros) scaled.zeros.push_back(z * cutoff_rad_s);
  for (const complex& p : proto.poles) scaled.poles.push_back(p * cutoff_rad_s);
  // H(s/a): gain picks up a^(Np - Nz), which leaves H(0) untouched.
  const int relative_degree =
      static_cast<int>(proto.poles.size()) - static_cast<int>(proto.zeros.size());
  scaled.gain = proto.gain * std::pow(cutoff_rad_s, relative_degree);
  return scaled;
}

DigitalFilter bilinear(const AnalogPrototype& analog, double sample_rate_hz, double prewarp_hz) {
  if (!(sample_rate_hz > 0.0)) throw std::domain_error("bilinear: sample_rate_hz must be > 0");
  if (!(prewarp_hz > 0.0 && prewarp_hz < sample_rate_hz / 2.0)) {
    throw std::domain_error("bilinear: prewarp_hz must lie in (0, fs/2)");
  }
  check_stable_prototype(analog);

  // Stretch the analog frequency axis so that the nominal edge
  // 2*pi*prewarp_hz lands on the bilinear image 2*fs*tan(pi*prewarp/fs).
  const double omega_nominal = 2.0 * kPi * prewarp_hz;
  const double omega_warped = 2.0 * sample_rate_hz * std::tan(kPi * prewarp_hz / sample_rate_hz);
  const AnalogPrototype warped = lowpass_scale(analog, omega_warped / omega_nominal);

  // s = c (z - 1) / (z + 1): each root r maps to (c + r) / (c - r), each
  // excess pole contributes a digital zero at z = -1, and the constant picks
  // up prod(c - z) / prod(c - p).
  const double c = 2.0 * sample_rate_hz;
  std::vector<complex> dig_zeros;
  std::vector<complex> dig_poles;
  complex gain_acc{warped.gain, 0.0};
  for (const complex& z : warped.zeros) {
    dig_zeros.push_back((c + z) / (c - z));
    gain_acc *= c - z;
  }
  for (const complex& p : warped.poles) {
    dig_poles.push_back((c + p) / (c - p));
    gain_acc /= c - p;
  }
  const std::size_t relative_degree = warped.poles.size() - warped.zeros.size();
  for (std::size_t i = 0; i < relative_degree; ++i) dig_zeros.emplace_back(-1.0, 0.0);

  if (std::abs(gain_acc.imag()) > 1e-9 * std::abs(gain_acc)) {
    throw std::logic_error("bilinear: gain did not come out real");
  }

  DigitalFilter filter;
  filter.overall_gain = gain_acc.real();
  for (const SectionRoots& s : pack_sections(dig_zeros, dig_poles)) {
    const Biquad q = section_coefficients(s);
    if (!section_stable(q)) throw std::logic_error("bilinear produced an unstable section");
    filter.sections.push_back(q);
  }
  return filter;
}

DigitalFilter design(const FilterSpec& spec) {
  check_order(spec.order);
  if (!(spec.sample_rate_hz > 0.0)) throw std::domain_error("filter: sample_rate_hz must be > 0");
  if (!(spec.cutoff_hz > 0.0 && spec.cutoff_hz < spec.sample_rate_hz / 2.0)) {
    throw std::domain_error("filter: cutoff_hz must lie in (0, sample_rate_hz/2)");
  }
  AnalogPrototype proto;
  switch (spec.family) {
    case FilterFamily::kButterworth:
      proto = butterworth_prototype(spec.order);
      break;
    case FilterFamily::kChebyshev1:
      proto = chebyshev1_prototype(spec.order, spec.passband_ripple_db);
      break;
    case FilterFamily::kChebyshev2:
      proto = chebyshev2_prototype(spec.order, spec.stopband_atten_db);
      break;
    case FilterFamily::kElliptic:
      proto = elliptic_prototype(spec.order, spec.passband_ripple_db, spec.stopband_atten_db);
      break;
  }
  const AnalogPrototype scaled = lowpass_scale(proto, 2.0 * kPi * spec.cutoff_hz);
  return bilinear(scaled, spec.sample_rate_hz, spec.cutoff_hz);
}

std::complex<double> analog_response(const AnalogPrototype& proto, double omega_rad_s) {
  const complex s{0.0, omega_rad_s};
  return proto.gain * root_product(proto.zeros, s) / root_product(proto.poles, s);
}

std::complex<double> frequency_response(const DigitalFilter& filter, double freq_hz,
                                        double sample_rate_hz) {
  if (!(sample_rate_hz > 0.0)) throw std::domain_error("frequency_response: sample_rate_hz must be > 0");
  if (!(freq_hz >= 0.0 && freq_hz <= sample_rate_hz / 2.0)) {
    throw std::domain_error("frequency_response: freq_hz must lie in [0, fs/2]");
  }
  const double w = 2.0 * kPi * freq_hz / sample_rate_hz;
  const complex e1 = std::polar(1.0, -w);
  const complex e2 = std::polar(1.0, -2.0 * w);
  complex h{filter.overall_gain, 0.0};
  for (const Biquad& q : filter.sections) {
    h *= (q.b0 + q.b1 * e1 + q.b2 * e2) / (1.0 + q.a1 * e1 + q.a2 * e2);
  }
  return h;
}

std::vector<double> apply(const DigitalFilter& filter, std::span<const double> samples) {
  for (double x : samples) {
    if (!std::isfinite(x)) throw std::domain_error("apply: input contains a non-finite sample");
  }
  std::vector<double> y(samples.begin(), samples.end());
  for (const Biquad& q : filter.sections) {
    double s1 = 0.0, s2 = 0.0;
    for (double& v : y) {
      const double x = v;
      const double out = q.b0 * x + s1;
      s1 = q.b1 * x - q.a1 * out + s2;
      s2 = q.b2 * x - q.a2 * out;
      v = out;
    }
  }
  if (filter.overall_gain != 1.0) {
    for (double& v : y) v *= filter.overall_gain;
  }
  return y;
}

double equivalent_noise_bandwidth(const DigitalFilter& filter, double sample_rate_hz) {
  if (!is_stable(filter)) throw std::domain_error("equivalent_noise_bandwidth: filter is unstable");
  const double nyquist = sample_rate_hz / 2.0;
  const auto power = [&](double f) { return std::norm(frequency_response(filter, f, sample_rate_hz)); };

  // Locate the magnitude peak on a grid, then refine by golden section.
  constexpr int kGrid = 4096;
  double peak = 0.0;
  int peak_idx = 0;
  double coarse_integral = 0.0;
  double prev = power(0.0);
  if (prev > peak) peak = prev;
  for (int i = 1; i <= kGrid; ++i) {
    const double f = nyquist * i / kGrid;
    const double p = power(f);
    coarse_integral += 0.5 * (prev + p) * (nyquist / kGrid);
    prev = p;
    if (p > peak) {
      peak = p;
      peak_idx = i;
    }
  }
  double lo = nyquist * std::max(0, peak_idx - 1) / kGrid;
  double hi = nyquist * std::min(kGrid, peak_idx + 1) / kGrid;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
  double p1 = power(x1), p2 = power(x2);
  for (int it = 0; it < 80; ++it) {
    if (p1 < p2) {
      lo = x1;
      x1 = x2;
      p1 = p2;
      x2 = lo + kInvPhi * (hi - lo);
      p2 = power(x2);
    } else {
      hi = x2;
      x2 = x1;
      p2 = p1;
      x1 = hi - kInvPhi * (hi - lo);
      p1 = power(x1);
    }
  }
  peak = std::max(peak, std::max(p1, p2));
  if (!(peak > 0.0)) throw std::domain_error("equivalent_noise_bandwidth: zero response");

  constexpr int kPanels = 64;
  const double eps_total = 1e-6 * std::max(coarse_integral, peak * nyquist * 1e-12);
  double integral = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double a = nyquist * i / kPanels;
    const double b = nyquist * (i + 1) / kPanels;
    const double fa = power(a), fb = power(b), fm = power(0.5 * (a + b));
    const double whole = simpson(a, b, fa, fm, fb);
    integral +=
        adaptive_simpson(power, a, b, fa, fm, fb, whole, eps_total / kPanels, 40);
  }
  return integral / peak;
}

std::size_t transient_samples(const DigitalFilter& filter) {
  double r_max = 0.0;
  for (const Biquad& q : filter.sections) r_max = std::max(r_max, section_pole_radius(q));
  if (!(r_max < 1.0)) throw std::domain_error("transient_samples: filter is unstable");
  return static_cast<std::size_t>(std::ceil(-std::log(1e-6) / (1.0 - r_max)));
}

bool is_stable(const DigitalFilter& filter) {
  for (const Biquad& q : filter.sections) {
    if (!section_stable(q)) return false;
  }
  return true;
}

std::string coefficient_dump(const DigitalFilter& filter) {
  std::string out;
  char line[256];
  for (const Biquad& q : filter.sections) {
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g %.17g\n", q.b0, q.b1, q.b2, q.a1,
                  q.a2);
    out += line;
  }
  std::snprintf(line, sizeof line, "%.17g\n", filter.overall_gain);
  out += line;
  return out;
}

}  // namespace cea::filters
