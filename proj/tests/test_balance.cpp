#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gainscatter/balance.hpp"
#include "gainscatter/response.hpp"

using namespace gainscatter;

namespace {

AtomParams atom_with(double gamma_nr) {
    AtomParams atom;
    atom.gamma_nr = gamma_nr;
    return atom;
}

}  // namespace

TEST_CASE("closed forms") {
    SUBCASE("golden ratio at vanishing nonradiative loss") {
        const CriticalPumps c = critical_pumps_closed_form(0.0, 1.0);
        CHECK(c.p_abs_zero == 0.0);
        CHECK(c.p_ext_zero ==
              doctest::Approx(0.5 * (1.0 + std::sqrt(5.0))).epsilon(1e-14));
    }

    SUBCASE("gamma_nr = gamma0/5 puts the extinction zero at 1.8") {
        const CriticalPumps c = critical_pumps_closed_form(0.2, 1.0);
        CHECK(c.p_ext_zero == doctest::Approx(1.8).epsilon(1e-14));
        CHECK(c.p_abs_zero == doctest::Approx(std::sqrt(0.24)).epsilon(1e-14));
    }

    SUBCASE("ordering for positive radiative rate") {
        for (double gamma_nr : {0.0, 0.1, 0.2, 1.0, 5.0}) {
            const CriticalPumps c = critical_pumps_closed_form(gamma_nr, 1.0);
            CHECK(c.p_ext_zero > c.p_abs_zero);
        }
    }
}

TEST_CASE("bisection solver agrees with the closed forms") {
    for (double gamma_nr : {0.1, 0.2, 1.0, 5.0}) {
        const CriticalPumps c = critical_pumps_closed_form(gamma_nr, 1.0);
        const double p_abs =
            critical_pump_root_solver(atom_with(gamma_nr), CrossSectionKind::Absorption);
        const double p_ext =
            critical_pump_root_solver(atom_with(gamma_nr), CrossSectionKind::Extinction);
        CHECK(p_abs == doctest::Approx(c.p_abs_zero).epsilon(1e-9));
        CHECK(p_ext == doctest::Approx(c.p_ext_zero).epsilon(1e-9));
    }

    // gamma_nr = 0: extinction still brackets, absorption never goes positive
    CHECK(critical_pump_root_solver(atom_with(0.0), CrossSectionKind::Extinction) ==
          doctest::Approx(0.5 * (1.0 + std::sqrt(5.0))).epsilon(1e-9));
    CHECK_THROWS_AS(
        critical_pump_root_solver(atom_with(0.0), CrossSectionKind::Absorption),
        std::runtime_error);
}

TEST_CASE("extinction changes sign downward at the critical pump") {
    const AtomParams atom = atom_with(0.2);
    DriveParams resonant;
    const double p = 1.8;
    const double eps = 1e-6;
    const double above = extinction_cross_section(
        derive_rates_at_pump(atom, resonant, p + eps));
    const double below = extinction_cross_section(
        derive_rates_at_pump(atom, resonant, p - eps));
    CHECK(below > 0.0);
    CHECK(above < 0.0);
}

TEST_CASE("golden-ratio limit for small nonradiative loss") {
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    const CriticalPumps c = critical_pumps_closed_form(1e-6, 1.0);
    CHECK(c.p_ext_zero > phi);
    CHECK(std::abs(c.p_ext_zero - phi) <= 2e-6);
}

TEST_CASE("unitarity residual") {
    AtomParams atom = atom_with(0.2);
    DriveParams drive;
    drive.rabi_probe = 0.05;
    drive.rabi_pump = 10.0;  // P = 1

    SUBCASE("exactly zero at resonance") {
        drive.detuning = 0.0;
        for (auto mode : {GammaOmegaMode::Flat, GammaOmegaMode::CubicFreeSpace}) {
            const DerivedRates r = derive_rates(atom, drive, mode);
            CHECK(unitarity_residual(r, drive) == 0.0);
        }
    }

    SUBCASE("identically zero in flat mode at any detuning") {
        for (double detuning : {-3.0, -0.4, 0.7, 2.9}) {
            drive.detuning = detuning;
            const DerivedRates r = derive_rates(atom, drive, GammaOmegaMode::Flat);
            CHECK(unitarity_residual(r, drive) == 0.0);
        }
    }

    SUBCASE("off-resonant cubic-mode residual is frequency-suppressed") {
        drive.detuning = 0.1;
        const DerivedRates r = derive_rates(atom, drive, GammaOmegaMode::CubicFreeSpace);
        const UnitarityBudget u = unitarity_budget(r, drive);
        CHECK(u.residual != 0.0);
        CHECK(std::abs(u.residual / u.outflow_rate) <= 3e-5);
        // the reduced form equals the two-term sum up to cancellation noise
        CHECK(u.outflow_rate + u.renormalization_rate ==
              doctest::Approx(u.residual).epsilon(1e-9));
    }

    SUBCASE("outflow and renormalization balance at leading order") {
        drive.detuning = 0.0;
        const DerivedRates r = derive_rates(atom, drive);
        const UnitarityBudget u = unitarity_budget(r, drive);
        CHECK(u.outflow_rate > 0.0);
        CHECK(u.renormalization_rate < 0.0);
        CHECK(u.residual == 0.0);
        // the two-term sum cancels up to roundoff of the individual terms
        CHECK(std::abs(u.outflow_rate + u.renormalization_rate) <=
              1e-14 * u.outflow_rate);
    }
}
