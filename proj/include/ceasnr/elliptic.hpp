// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace cea::elliptic {

// Raised when a Landen modulus sequence fails to reach tolerance. Does not
// occur for parameter m in [0, 1); kept as a guard for degenerate inputs.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Descending sequence of elliptic moduli k_0 = sqrt(m), k_{n+1} =
// (k_n / (1 + sqrt(1 - k_n^2)))^2, iterated until the modulus drops below
// 1e-15 (quadratic convergence; typically <= 10 steps).
std::vector<double> landen_moduli(double m);

// Complete elliptic integral of the first kind K(m), parameter convention
// (m = k^2). Returns +inf at m = 1.
double complete_k(double m);

// Incomplete elliptic integral of the first kind, u = F(phi | m), extended
// to complex phi.
std::complex<double> incomplete_f(std::complex<double> phi, double m);

// Jacobi amplitude phi = am(u | m) for complex u.
std::complex<double> jacobi_am(std::complex<double> u, double m);

// Jacobi elliptic functions for complex argument.
std::complex<double> jacobi_sn(std::complex<double> u, double m);
std::complex<double> jacobi_cd(std::complex<double> u, double m);

// Inverse of sn: u with sn(u | m) = w.
std::complex<double> inverse_sn(std::complex<double> w, double m);

}  // namespace cea::elliptic
