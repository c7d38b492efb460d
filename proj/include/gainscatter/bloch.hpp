#pragma once

#include <complex>
#include <functional>

#include "gainscatter/params.hpp"

namespace gainscatter {

// Two-level density-matrix sample at one instant.
struct BlochState {
    double rho_gg = 1.0;
    double rho_ee = 0.0;
    std::complex<double> rho_eg{0.0, 0.0};
};

// Long-time limit of the pumped two-level atom and the statistical weights
// of the corresponding ground/excited mixture.
struct SteadyState {
    double rho_gg_inf = 1.0;  // gamma / Gamma
    double rho_ee_inf = 0.0;  // P / Gamma
    double weight_g = 1.0;    // sqrt(gamma / Gamma)
    double weight_e = 0.0;    // sqrt(P / Gamma)
};

// Closed-form evolution from populations (1 - Ne, Ne) with the maximal
// coherence sqrt(Ne - Ne^2) at t = 0. Populations relax at Gamma, the
// coherence decays at Gamma / 2 on top of its optical phase.
BlochState analytic_evolution(const DerivedRates& rates, double initial_excited,
                              double t);

SteadyState steady_state(const DerivedRates& rates);

// Fixed-step RK4 integration of the incoherent two-level equations.
// Internal consistency oracle for analytic_evolution; unlike the closed
// form it accepts an arbitrary initial coherence.
//
// Step guards: dt * Gamma <= 1e-2 (accuracy of the population relaxation)
// and dt * omega0 <= 0.5 (resolution of the coherence phase).
BlochState integrate_bloch(const DerivedRates& rates, const BlochState& initial,
                           double t_end, double dt);

// Same integrator, calling observer(t, state) at t = 0 and after every step.
BlochState integrate_bloch(const DerivedRates& rates, const BlochState& initial,
                           double t_end, double dt,
                           const std::function<void(double, const BlochState&)>& observer);

}  // namespace gainscatter
