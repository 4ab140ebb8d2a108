// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace cea {

// CODATA 2018 exact values (SI redefinition).
inline constexpr double kBoltzmann = 1.380649e-23;          // J/K
inline constexpr double kElectronCharge = 1.602176634e-19;  // C

struct PhysicalConstants {
  double boltzmann_k = kBoltzmann;
  double electron_charge_q = kElectronCharge;
};

}  // namespace cea
