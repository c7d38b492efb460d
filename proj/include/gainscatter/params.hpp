#pragma once

#include <cmath>
#include <numbers>

namespace gainscatter {

inline constexpr double pi = std::numbers::pi;

// How the radiative rate at the probe frequency is evaluated.
//
// Flat pins every slowly varying frequency factor at omega0 (quasi-resonant
// convention; line shapes are exact Lorentzians at all detunings).
// CubicFreeSpace keeps the free-space omega^3 law and the exact omega
// prefactors, for sweeps wide enough that the cubic density matters.
enum class GammaOmegaMode { Flat, CubicFreeSpace };

// Atomic constants. Natural units hbar = eps0 = c = 1; rates and frequencies
// are all expressed in the same unit, conventionally gamma0.
struct AtomParams {
    double omega0 = 1.0e4;   // g -> e transition frequency
    double omega_u = 3.0e4;  // e -> u interval
    double gamma0 = 1.0;     // radiative linewidth of e -> g
    double gamma_nr = 0.0;   // nonradiative part of the e -> g decay, >= 0
    double gamma_u = 100.0;  // linewidth of the upper auxiliary state u

    // Dipole projection on the probe polarization, fixed so that the
    // free-space rate at omega0 comes out equal to gamma0. Not an
    // independent input; it only enters outputs through sigma0.
    double mu_parallel_sq() const {
        return 3.0 * pi * gamma0 / (omega0 * omega0 * omega0);
    }
    double mu_parallel() const { return std::sqrt(mu_parallel_sq()); }

    void validate() const;
};

// Probe and pump fields.
struct DriveParams {
    double detuning = 0.0;     // omega - omega0, probe detuning
    double rabi_probe = 0.05;  // Omega_0
    double rabi_pump = 0.0;    // Omega_p

    void validate() const;
};

// Asymptotic-regime thresholds. Violations set flags on DerivedRates;
// they are never hard errors.
struct RegimeThresholds {
    double pump_adiabatic_ratio = 100.0;  // gamma_u / gamma0 at least this
    double weak_probe_ratio = 0.1;        // Omega_0 / Gamma at most this
};

// Composite rates computed once and shared by every response formula.
struct DerivedRates {
    double pump_rate = 0.0;    // P = Omega_p^2 / gamma_u
    double gamma = 0.0;        // gamma_nr + gamma0
    double big_gamma = 0.0;    // Gamma = gamma + P, total incoherence rate
    double gamma_omega = 0.0;  // radiative rate at the probe frequency

    // context carried along so downstream formulas need no second lookup
    double gamma0 = 0.0;
    double gamma_nr = 0.0;
    double omega0 = 0.0;
    double omega_probe = 0.0;
    double detuning = 0.0;
    double omega_factor = 1.0;  // omega/omega0 prefactor; exactly 1 in Flat mode
    GammaOmegaMode mode = GammaOmegaMode::Flat;

    bool incoherent_pump_ok = true;  // gamma_u sufficiently fast
    bool weak_probe_ok = true;       // Omega_0 sufficiently small
};

DerivedRates derive_rates(const AtomParams& atom, const DriveParams& drive,
                          GammaOmegaMode mode = GammaOmegaMode::Flat,
                          const RegimeThresholds& thresholds = {});

// Same derivation with the pump rate set directly instead of through
// Omega_p^2 / gamma_u. Used by pump sweeps and root solvers, where the
// sweep variable is P itself.
DerivedRates derive_rates_at_pump(const AtomParams& atom, const DriveParams& drive,
                                  double pump_rate,
                                  GammaOmegaMode mode = GammaOmegaMode::Flat,
                                  const RegimeThresholds& thresholds = {});

}  // namespace gainscatter
