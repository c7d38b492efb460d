#include "gainscatter/params.hpp"

#include <stdexcept>

namespace gainscatter {

void AtomParams::validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
    if (!(gamma0 > 0.0)) throw std::invalid_argument("gamma0 must be positive");
    if (gamma_nr < 0.0) throw std::invalid_argument("gamma_nr must be >= 0");
    if (!(gamma_u > 0.0)) throw std::invalid_argument("gamma_u must be positive");
}

void DriveParams::validate() const {
    if (rabi_probe < 0.0) throw std::invalid_argument("rabi_probe must be >= 0");
    if (rabi_pump < 0.0) throw std::invalid_argument("rabi_pump must be >= 0");
}

namespace {

DerivedRates assemble(const AtomParams& atom, const DriveParams& drive,
                      double pump_rate, GammaOmegaMode mode,
                      const RegimeThresholds& th) {
    DerivedRates r;
    r.mode = mode;
    r.gamma0 = atom.gamma0;
    r.gamma_nr = atom.gamma_nr;
    r.omega0 = atom.omega0;
    r.detuning = drive.detuning;
    r.omega_probe = atom.omega0 + drive.detuning;

    r.pump_rate = pump_rate;
    r.gamma = atom.gamma_nr + atom.gamma0;
    r.big_gamma = r.gamma + r.pump_rate;

    if (mode == GammaOmegaMode::CubicFreeSpace) {
        if (!(r.omega_probe > 0.0))
            throw std::invalid_argument(
                "probe frequency must be positive in CubicFreeSpace mode");
        const double ratio = r.omega_probe / atom.omega0;
        r.gamma_omega = atom.gamma0 * ratio * ratio * ratio;
        r.omega_factor = ratio;
    } else {
        r.gamma_omega = atom.gamma0;
        r.omega_factor = 1.0;
    }

    r.incoherent_pump_ok = atom.gamma_u >= th.pump_adiabatic_ratio * atom.gamma0;
    r.weak_probe_ok = drive.rabi_probe <= th.weak_probe_ratio * r.big_gamma;
    return r;
}

}  // namespace

DerivedRates derive_rates(const AtomParams& atom, const DriveParams& drive,
                          GammaOmegaMode mode, const RegimeThresholds& th) {
    atom.validate();
    drive.validate();
    const double pump = drive.rabi_pump * drive.rabi_pump / atom.gamma_u;
    return assemble(atom, drive, pump, mode, th);
}

DerivedRates derive_rates_at_pump(const AtomParams& atom, const DriveParams& drive,
                                  double pump_rate, GammaOmegaMode mode,
                                  const RegimeThresholds& th) {
    atom.validate();
    drive.validate();
    if (pump_rate < 0.0) throw std::invalid_argument("pump rate must be >= 0");
    return assemble(atom, drive, pump_rate, mode, th);
}

}  // namespace gainscatter
