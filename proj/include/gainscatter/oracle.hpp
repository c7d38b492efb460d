#pragma once

#include <string>
#include <vector>

#include "gainscatter/params.hpp"

namespace gainscatter {

// Grid parameters for the brute-force quadratures. Times are in the shared
// rate unit (1/gamma0); freq_window is the half-width of the emitted-
// frequency window in units of the relevant line width. The documented
// Lorentzian tail truncated at 40 line widths biases rate-type integrals by
// about 1/(40 pi), which is folded into the 1e-2 tolerances.
struct QuadratureSpec {
    double t_end = 50.0;
    int n_time = 4000;
    double freq_window = 40.0;
    int n_freq = 20000;

    // Gamma * t_end = 50, for the steady-illumination targets.
    static QuadratureSpec steady(const DerivedRates& rates);

    // gamma * t_end = 0.004 with the line resolved, for the decay-rate
    // target whose validity window is gamma * t << 1.
    static QuadratureSpec golden_rule(const DerivedRates& rates);
};

// Probe-photon absorption route: composite quadrature of the single
// time integral, modulus squared, times Gamma (gamma/Gamma). Positive.
double quad_absorption_w3(const DerivedRates& rates, const DriveParams& drive,
                          const QuadratureSpec& spec);

// Stimulated-emission route, same structure with weight P/Gamma. Negative.
double quad_stimulated_w4(const DerivedRates& rates, const DriveParams& drive,
                          const QuadratureSpec& spec);

// Scattered power from the ground-state and excited-state routes. The inner
// double time integrals reduce per emitted frequency to elementary
// exponentials; the brute-force elements are the frequency quadrature
// (free-space omega'^3 density kept inside, not frozen at the pole) and the
// centered-difference time derivative of the radiated energy.
struct ScatteringQuadrature {
    double w_ground = 0.0;
    double w_excited = 0.0;
    double total = 0.0;
};

ScatteringQuadrature quad_scattering(const DerivedRates& rates,
                                     const DriveParams& drive,
                                     const QuadratureSpec& spec);

// Spontaneous decay rate recovered from the emission probability in the
// golden-rule window gamma * t << 1. dipole_sq_scale rescales the dipole
// weight (the result is linear in it).
double quad_gamma0(const DerivedRates& rates, const QuadratureSpec& spec,
                   double dipole_sq_scale = 1.0);

// Pump-fed spontaneous-emission power from the Lorentzian-weighted
// free-space density.
double quad_spontaneous_w5(const DerivedRates& rates, const QuadratureSpec& spec);

// Per-frequency density of the spontaneous emission line at
// detuning_prime = omega' - omega0; integrates to the w5 power. Its half
// width at half maximum is Gamma / 2.
double emission_line_density(const DerivedRates& rates, double detuning_prime,
                             const QuadratureSpec& spec);

struct OracleResult {
    std::string target;
    double closed_form = 0.0;
    double quadrature = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs every quadrature target against its closed form at reference
// detunings {0, Gamma/2, Gamma}.
std::vector<OracleResult> run_oracle_suite(const AtomParams& atom,
                                           const DriveParams& drive,
                                           GammaOmegaMode mode = GammaOmegaMode::Flat);

}  // namespace gainscatter
