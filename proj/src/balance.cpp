#include "gainscatter/balance.hpp"

#include <cmath>
#include <stdexcept>

#include "gainscatter/response.hpp"

namespace gainscatter {

CriticalPumps critical_pumps_closed_form(double gamma_nr, double gamma_omega) {
    if (gamma_nr < 0.0) throw std::invalid_argument("gamma_nr must be >= 0");
    if (!(gamma_omega > 0.0)) throw std::invalid_argument("gamma_omega must be positive");
    CriticalPumps c;
    c.p_abs_zero = std::sqrt(gamma_nr * gamma_nr + gamma_nr * gamma_omega);
    c.p_ext_zero = 0.5 * (gamma_omega +
                          std::sqrt(4.0 * gamma_nr * gamma_nr +
                                    8.0 * gamma_nr * gamma_omega +
                                    5.0 * gamma_omega * gamma_omega));
    return c;
}

double critical_pump_root_solver(const AtomParams& atom, CrossSectionKind kind,
                                 double pump_max) {
    atom.validate();
    if (!(pump_max > 0.0)) throw std::invalid_argument("pump_max must be positive");

    DriveParams resonant;
    resonant.detuning = 0.0;
    const auto sigma = [&](double pump) {
        const DerivedRates r = derive_rates_at_pump(atom, resonant, pump);
        return kind == CrossSectionKind::Absorption ? absorption_cross_section(r)
                                                    : extinction_cross_section(r);
    };

    double lo = 0.0;
    double hi = pump_max;
    double f_lo = sigma(lo);
    const double f_hi = sigma(hi);
    if (!(f_lo * f_hi < 0.0))
        throw std::runtime_error(
            "critical_pump_root_solver: cross-section does not change sign on "
            "[0, pump_max]");

    for (int i = 0; i < 200 && (hi - lo) > 1.0e-13 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = sigma(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

UnitarityBudget unitarity_budget(const DerivedRates& r, const DriveParams& d) {
    if (!(r.big_gamma > 0.0)) throw std::invalid_argument("Gamma must be positive");
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    const double probe_sq = d.rabi_probe * d.rabi_probe;
    const double excited = r.pump_rate / r.big_gamma;

    UnitarityBudget u;
    u.outflow_rate = probe_sq *
                     (r.gamma + r.pump_rate + excited * r.gamma_omega -
                      excited * r.gamma0) /
                     (4.0 * lor);
    u.renormalization_rate = -probe_sq * (r.gamma + r.pump_rate) / (4.0 * lor);
    u.residual = probe_sq * excited * (r.gamma_omega - r.gamma0) / (4.0 * lor);
    return u;
}

double unitarity_residual(const DerivedRates& r, const DriveParams& d) {
    return unitarity_budget(r, d).residual;
}

}  // namespace gainscatter
