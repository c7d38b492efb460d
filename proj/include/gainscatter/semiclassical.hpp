#pragma once

#include <array>
#include <complex>

#include "gainscatter/params.hpp"

namespace gainscatter {

// Probe-polarization component of the effective linear polarizability,
// in units of mu_par^2 / (hbar gamma0). Vanishes at P = gamma, where the
// ground and excited contributions cancel; its imaginary part carries the
// sign of (gamma - P), so gain flips the absorptive sign.
struct Polarizability {
    std::complex<double> value{0.0, 0.0};
};

Polarizability polarizability(const DerivedRates& rates);

// Steady-state dipole expectation value at time t in the complex
// representation, components in units of mu_par. The probe polarization is
// taken along x. Satisfies d(omega) = alpha(omega) eps E0 with E0 expressed
// through the probe Rabi frequency.
std::array<std::complex<double>, 3> dipole_expectation(const DerivedRates& rates,
                                                       const DriveParams& drive,
                                                       double t);

// Semiclassical coherent power: the induced dipole radiates a field back
// onto itself and the in-phase work is taken. Only the finite imaginary
// part of the self-propagator enters; the divergent real part is a
// frequency renormalization and is dropped. Output in units of
// hbar omega0 gamma0. Carries the (P - gamma)^2 / Gamma^2 factor relative
// to the scattered power.
double coherent_power(const DerivedRates& rates, const DriveParams& drive);

}  // namespace gainscatter
