#include "gainscatter/response.hpp"

#include <stdexcept>

namespace gainscatter {

double lorentzian_denominator(double detuning, double big_gamma) {
    return detuning * detuning + 0.25 * big_gamma * big_gamma;
}

namespace {

void require_gamma(const DerivedRates& r) {
    if (!(r.big_gamma > 0.0)) throw std::invalid_argument("Gamma must be positive");
}

// (gamma/Gamma) gamma_nr - (P/Gamma) P, the net absorption numerator.
double net_absorption_rate(const DerivedRates& r) {
    return (r.gamma / r.big_gamma) * r.gamma_nr -
           (r.pump_rate / r.big_gamma) * r.pump_rate;
}

}  // namespace

double scattered_power(const DerivedRates& r, const DriveParams& d) {
    require_gamma(r);
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    return r.omega_factor * d.rabi_probe * d.rabi_probe * r.gamma_omega /
           (4.0 * lor * r.gamma0);
}

double scattering_cross_section(const DerivedRates& r) {
    require_gamma(r);
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    return r.omega_factor * r.gamma0 * r.gamma_omega / (4.0 * lor);
}

double absorbed_power(const DerivedRates& r, const DriveParams& d) {
    require_gamma(r);
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    return r.omega_factor * d.rabi_probe * d.rabi_probe * net_absorption_rate(r) /
           (4.0 * lor * r.gamma0);
}

double absorption_cross_section(const DerivedRates& r) {
    require_gamma(r);
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    return r.omega_factor * r.gamma0 * net_absorption_rate(r) / (4.0 * lor);
}

double extinction_cross_section(const DerivedRates& r) {
    return scattering_cross_section(r) + absorption_cross_section(r);
}

double incoherent_power(const DerivedRates& r, const DriveParams& d) {
    require_gamma(r);
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    const double probe_sq = d.rabi_probe * d.rabi_probe;
    const double gamma_sq = r.big_gamma * r.big_gamma;
    // hbar omega gamma_omega, -hbar omega0 gamma0 / 2, and the detuning term,
    // all relative to hbar omega0 gamma0
    const double bracket = r.omega_factor * r.gamma_omega / r.gamma0 - 0.5 +
                           2.0 * r.detuning * r.detuning / gamma_sq;
    return (r.pump_rate / r.big_gamma) *
           (1.0 - probe_sq * gamma_sq / (8.0 * lor * lor) * bracket);
}

double incoherent_power_resonant(const DerivedRates& r, const DriveParams& d) {
    require_gamma(r);
    const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
    const double probe_sq = d.rabi_probe * d.rabi_probe;
    const double gamma_sq = r.big_gamma * r.big_gamma;
    return (r.pump_rate / r.big_gamma) *
           (1.0 - probe_sq * gamma_sq / (16.0 * lor * lor));
}

ResponsePoint evaluate_point(const DerivedRates& r, const DriveParams& d) {
    ResponsePoint p;
    p.detuning = r.detuning;
    p.sigma_sc = scattering_cross_section(r);
    p.sigma_abs = absorption_cross_section(r);
    p.sigma_ext = p.sigma_sc + p.sigma_abs;
    p.w_sc = scattered_power(r, d);
    p.w_abs = absorbed_power(r, d);
    p.w_inc = incoherent_power(r, d);
    return p;
}

}  // namespace gainscatter
