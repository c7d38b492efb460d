#include "gainscatter/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gainscatter {

namespace {

struct Derivs {
    double gg, ee;
    std::complex<double> eg;
};

// Population flow is evaluated once and used with both signs, which keeps
// the trace conserved to roundoff at every stage.
Derivs rhs(const DerivedRates& r, const BlochState& s) {
    const double flow = r.pump_rate * s.rho_gg - r.gamma * s.rho_ee;
    Derivs d;
    d.ee = flow;
    d.gg = -flow;
    d.eg = std::complex<double>(-0.5 * r.big_gamma, -r.omega0) * s.rho_eg;
    return d;
}

BlochState advance(const BlochState& s, const Derivs& d, double h) {
    BlochState out;
    out.rho_gg = s.rho_gg + h * d.gg;
    out.rho_ee = s.rho_ee + h * d.ee;
    out.rho_eg = s.rho_eg + h * d.eg;
    return out;
}

BlochState rk4_step(const DerivedRates& r, const BlochState& s, double h) {
    const Derivs k1 = rhs(r, s);
    const Derivs k2 = rhs(r, advance(s, k1, 0.5 * h));
    const Derivs k3 = rhs(r, advance(s, k2, 0.5 * h));
    const Derivs k4 = rhs(r, advance(s, k3, h));
    BlochState out;
    out.rho_gg = s.rho_gg + h / 6.0 * (k1.gg + 2.0 * k2.gg + 2.0 * k3.gg + k4.gg);
    out.rho_ee = s.rho_ee + h / 6.0 * (k1.ee + 2.0 * k2.ee + 2.0 * k3.ee + k4.ee);
    out.rho_eg = s.rho_eg + h / 6.0 * (k1.eg + 2.0 * k2.eg + 2.0 * k3.eg + k4.eg);
    return out;
}

}  // namespace

BlochState analytic_evolution(const DerivedRates& rates, double initial_excited,
                              double t) {
    if (initial_excited < 0.0 || initial_excited > 1.0)
        throw std::invalid_argument("initial excited population must lie in [0, 1]");
    if (t < 0.0) throw std::invalid_argument("time must be >= 0");
    if (!(rates.big_gamma > 0.0))
        throw std::invalid_argument("analytic_evolution requires Gamma > 0");

    const double g = rates.big_gamma;
    const double relax = std::exp(-g * t);
    const double ne = initial_excited;

    BlochState s;
    s.rho_ee = rates.pump_rate / g * (1.0 - relax) + ne * relax;
    s.rho_gg = rates.gamma / g * (1.0 - relax) + (1.0 - ne) * relax;
    const double c0 = std::sqrt(std::max(0.0, ne - ne * ne));
    s.rho_eg = c0 * std::exp(std::complex<double>(-0.5 * g * t, -rates.omega0 * t));
    return s;
}

SteadyState steady_state(const DerivedRates& rates) {
    if (!(rates.big_gamma > 0.0))
        throw std::invalid_argument("steady_state requires Gamma > 0");
    SteadyState s;
    s.rho_ee_inf = rates.pump_rate / rates.big_gamma;
    s.rho_gg_inf = 1.0 - s.rho_ee_inf;  // keeps the trace exactly 1
    s.weight_g = std::sqrt(s.rho_gg_inf);
    s.weight_e = std::sqrt(s.rho_ee_inf);
    return s;
}

BlochState integrate_bloch(const DerivedRates& rates, const BlochState& initial,
                           double t_end, double dt) {
    return integrate_bloch(rates, initial, t_end, dt, nullptr);
}

BlochState integrate_bloch(const DerivedRates& rates, const BlochState& initial,
                           double t_end, double dt,
                           const std::function<void(double, const BlochState&)>& observer) {
    if (t_end < 0.0) throw std::invalid_argument("t_end must be >= 0");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (dt * rates.big_gamma > 1.0e-2 * (1.0 + 1.0e-12))
        throw std::invalid_argument("step-size guard: dt * Gamma must be <= 1e-2");
    if (dt * rates.omega0 > 0.5)
        throw std::invalid_argument("step-size guard: dt * omega0 must be <= 0.5");

    if (observer) observer(0.0, initial);
    if (t_end == 0.0) return initial;

    const long n = std::max(1L, std::lround(std::ceil(t_end / dt - 1.0e-9)));
    const double h = t_end / static_cast<double>(n);

    BlochState s = initial;
    for (long i = 0; i < n; ++i) {
        s = rk4_step(rates, s, h);
        if (observer) observer(h * static_cast<double>(i + 1), s);
    }
    return s;
}

}  // namespace gainscatter
