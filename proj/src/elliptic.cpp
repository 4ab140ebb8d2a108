// SPDX-License-Identifier: Apache-2.0

// Jacobi elliptic functions via Landen transformation sequences, following
// the classical recurrences collected in Orfanidis, "Lecture Notes on
// Elliptic Filter Design" (www.ece.rutgers.edu/~orfanidi/ece521/notes.pdf).

#include "ceasnr/elliptic.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

namespace cea::elliptic {

namespace {

using complex = std::complex<double>;

constexpr int kMaxLanden = 32;
constexpr double kLandenTol = 1e-15;

double square(double x) { return x * x; }
complex square(const complex& x) { return x * x; }

double k_from_moduli(const std::vector<double>& moduli) {
  double k = std::numbers::pi / 2.0;
  for (std::size_t i = 1; i < moduli.size(); ++i) k *= 1.0 + moduli[i];
  return k;
}

}  // namespace

std::vector<double> landen_moduli(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("landen_moduli: parameter m must be in [0, 1)");
  double modulus = std::sqrt(m);
  std::vector<double> seq{modulus};
  seq.reserve(kMaxLanden);
  while (modulus > kLandenTol) {
    if (static_cast<int>(seq.size()) >= kMaxLanden) {
      throw ConvergenceError("landen_moduli: sequence did not converge");
    }
    modulus = square(modulus / (1.0 + std::sqrt(1.0 - square(modulus))));
    seq.push_back(modulus);
  }
  return seq;
}

double complete_k(double m) {
  if (!(m >= 0.0 && m <= 1.0)) throw std::domain_error("complete_k: parameter m must be in [0, 1]");
  if (m == 1.0) return std::numeric_limits<double>::infinity();
  if (m > 1.0 - 1e-12) {
    // Logarithmic asymptote near the m = 1 singularity.
    const double m1 = 1.0 - m;
    const double t = -0.5 * std::log(m1 / 16.0);
    return t + (t - 1.0) * m1 / 4.0;
  }
  return k_from_moduli(landen_moduli(m));
}

std::complex<double> incomplete_f(std::complex<double> phi, double m) {
  if (std::abs(phi) < 1e-3) {
    // Two-term series; more accurate than the recurrence for tiny phi.
    return phi * (1.0 + square(phi) * (m / 6.0));
  }
  const auto moduli = landen_moduli(m);
  complex w = std::sin(phi);
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    w *= 2.0 / ((1.0 + moduli[i]) * (1.0 + std::sqrt(1.0 - square(moduli[i - 1] * w))));
  }
  return (2.0 / std::numbers::pi) * std::asin(w) * k_from_moduli(moduli);
}

std::complex<double> jacobi_am(std::complex<double> u, double m) {
  // Descending Landen (Gauss) transformation: start from
  // w_N = sin((pi/2) u / K) and ascend w_{n-1} = w_n (1 + k_n) / (1 + k_n w_n^2).
  const auto moduli = landen_moduli(m);
  complex w = std::sin((std::numbers::pi / 2.0) * u / k_from_moduli(moduli));
  for (std::size_t i = moduli.size() - 1; i >= 1; --i) {
    w *= (1.0 + moduli[i]) / (1.0 + moduli[i] * square(w));
  }
  return std::asin(w);
}

std::complex<double> jacobi_sn(std::complex<double> u, double m) {
  return std::sin(jacobi_am(u, m));
}

std::complex<double> jacobi_cd(std::complex<double> u, double m) {
  const complex phi = jacobi_am(u, m);
  const complex s = std::sin(phi);
  return std::cos(phi) / std::sqrt(1.0 - m * square(s));
}

std::complex<double> inverse_sn(std::complex<double> w, double m) {
  return incomplete_f(std::asin(w), m);
}

}  // namespace cea::elliptic
