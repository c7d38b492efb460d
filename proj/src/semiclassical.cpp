#include "gainscatter/semiclassical.hpp"

#include <cmath>
#include <stdexcept>

#include "gainscatter/greens.hpp"

namespace gainscatter {

namespace {

void require_gamma(const DerivedRates& r) {
    if (!(r.big_gamma > 0.0)) throw std::invalid_argument("Gamma must be positive");
}

// Dipole amplitude in units of mu_par, optical phase omitted.
std::complex<double> dipole_amplitude(const DerivedRates& r, const DriveParams& d) {
    const std::complex<double> resonance(r.detuning, 0.5 * r.big_gamma);
    return (r.pump_rate - r.gamma) / r.big_gamma * d.rabi_probe / resonance;
}

}  // namespace

Polarizability polarizability(const DerivedRates& r) {
    require_gamma(r);
    const std::complex<double> resonance(r.detuning, 0.5 * r.big_gamma);
    Polarizability a;
    a.value = (r.pump_rate - r.gamma) / r.big_gamma * r.gamma0 / resonance;
    return a;
}

std::array<std::complex<double>, 3> dipole_expectation(const DerivedRates& r,
                                                       const DriveParams& d,
                                                       double t) {
    require_gamma(r);
    const double omega = r.omega0 + r.detuning;
    const std::complex<double> phase(std::cos(omega * t), -std::sin(omega * t));
    return {dipole_amplitude(r, d) * phase, {0.0, 0.0}, {0.0, 0.0}};
}

double coherent_power(const DerivedRates& r, const DriveParams& d) {
    require_gamma(r);
    // all slowly varying frequency factors at the mode's effective frequency
    const double omega = r.omega_factor * r.omega0;
    const std::complex<double> dip = dipole_amplitude(r, d);

    // field radiated back at the dipole's own position; only i Im{G} kept
    const double im_g = im_green_coincident(omega);
    const std::complex<double> field =
        -omega * omega * std::complex<double>(0.0, im_g) * dip;

    const double mu_sq = 3.0 * pi * r.gamma0 / (r.omega0 * r.omega0 * r.omega0);
    const double power = -0.5 * omega * mu_sq * std::imag(dip * std::conj(field));
    return power / (r.omega0 * r.gamma0);
}

}  // namespace gainscatter
