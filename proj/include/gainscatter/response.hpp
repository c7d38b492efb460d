#pragma once

#include "gainscatter/params.hpp"

namespace gainscatter {

// One spectrum sample. Cross-sections are in units of
// sigma0 = 2 omega0 mu_par^2 / gamma0 (the resonant free-atom value);
// powers are in units of hbar omega0 gamma0 with the probe Rabi frequency
// in units of gamma0.
struct ResponsePoint {
    double detuning = 0.0;
    double sigma_sc = 0.0;
    double sigma_abs = 0.0;
    double sigma_ext = 0.0;
    double w_sc = 0.0;
    double w_abs = 0.0;
    double w_inc = 0.0;
};

// delta^2 + Gamma^2 / 4, the universal line-shape denominator.
double lorentzian_denominator(double detuning, double big_gamma);

// Steady-state power scattered out of the probe beam.
double scattered_power(const DerivedRates& rates, const DriveParams& drive);

double scattering_cross_section(const DerivedRates& rates);

// Net absorbed power: nonradiative loss of the ground-state fraction minus
// stimulated emission fed by the pump. Negative values mean net gain.
double absorbed_power(const DerivedRates& rates, const DriveParams& drive);

double absorption_cross_section(const DerivedRates& rates);

// Extinction = scattering + absorption, computed as that sum so the
// decomposition identity holds bitwise for every parameter set.
double extinction_cross_section(const DerivedRates& rates);

// Spontaneous-emission power fed by the pump, including the probe-field
// correction to the emission rate. Nonzero even at Omega_0 = 0.
double incoherent_power(const DerivedRates& rates, const DriveParams& drive);

// Resonant approximation of the same quantity.
double incoherent_power_resonant(const DerivedRates& rates, const DriveParams& drive);

ResponsePoint evaluate_point(const DerivedRates& rates, const DriveParams& drive);

}  // namespace gainscatter
