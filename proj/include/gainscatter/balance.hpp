#pragma once

#include "gainscatter/params.hpp"

namespace gainscatter {

// Pump rates at which the resonant absorption and extinction change sign.
// Above p_abs_zero stimulated emission beats the nonradiative loss; above
// p_ext_zero the atom amplifies the probe beam outright (gain/loss balance).
struct CriticalPumps {
    double p_abs_zero = 0.0;
    double p_ext_zero = 0.0;
};

enum class CrossSectionKind { Absorption, Extinction };

// Closed forms:
//   p_abs_zero = sqrt(gamma_nr^2 + gamma_nr gamma_omega)
//   p_ext_zero = [gamma_omega + sqrt(4 gamma_nr^2 + 8 gamma_nr gamma_omega
//                                    + 5 gamma_omega^2)] / 2
// For gamma_nr -> 0 the extinction zero tends to the golden ratio times
// gamma_omega.
CriticalPumps critical_pumps_closed_form(double gamma_nr, double gamma_omega);

// Bisection root of sigma(P) = 0 at resonance for the given atom. Throws
// when sigma does not change sign on [0, pump_max]; for Absorption that
// happens whenever gamma_nr = 0.
double critical_pump_root_solver(const AtomParams& atom, CrossSectionKind kind,
                                 double pump_max = 1.0e3);

// Probability book-keeping at order Omega_0^2 / Gamma: the rate of leaving
// the steady manifold, the rate restored by state renormalization, and
// their sum. The sum reduces to
//   Omega_0^2 (P/Gamma)(gamma_omega - gamma0) / (4 [delta^2 + Gamma^2/4])
// and is computed in that cancellation-free form, so it is exactly zero
// whenever gamma_omega = gamma0.
struct UnitarityBudget {
    double outflow_rate = 0.0;
    double renormalization_rate = 0.0;
    double residual = 0.0;
};

UnitarityBudget unitarity_budget(const DerivedRates& rates, const DriveParams& drive);

double unitarity_residual(const DerivedRates& rates, const DriveParams& drive);

}  // namespace gainscatter
