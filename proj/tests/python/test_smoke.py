"""Smoke tests for the python bindings."""

import math

import pytest

import gainscatter as gs


def rates(gamma_nr=0.0, pump=0.0, detuning=0.0, mode=gs.GammaOmegaMode.Flat):
    atom = gs.AtomParams()
    atom.gamma_nr = gamma_nr
    drive = gs.DriveParams()
    drive.detuning = detuning
    return gs.derive_rates_at_pump(atom, drive, pump, mode), atom, drive


def test_version():
    assert gs.__version__


def test_derived_rates():
    atom = gs.AtomParams()
    drive = gs.DriveParams()
    drive.rabi_pump = 0.1
    r = gs.derive_rates(atom, drive)
    assert r.pump_rate == pytest.approx(1.0e-4, rel=1e-12)
    assert r.big_gamma == r.gamma + r.pump_rate


def test_resonant_cross_sections():
    r, _, _ = rates(gamma_nr=0.2)
    assert gs.scattering_cross_section(r) == pytest.approx(1.0 / 1.44, rel=1e-12)
    assert gs.absorption_cross_section(r) == pytest.approx(0.2 / 1.44, rel=1e-12)
    assert gs.extinction_cross_section(r) == pytest.approx(1.2 / 1.44, rel=1e-12)


def test_decomposition():
    r, _, _ = rates(gamma_nr=0.7, pump=2.3, detuning=-1.1)
    total = gs.scattering_cross_section(r) + gs.absorption_cross_section(r)
    assert gs.extinction_cross_section(r) == total


def test_golden_ratio_crossing():
    c = gs.critical_pumps_closed_form(0.0, 1.0)
    assert c.p_ext_zero == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-12)
    assert gs.critical_pumps_closed_form(0.2, 1.0).p_ext_zero == pytest.approx(
        1.8, rel=1e-12
    )
    atom = gs.AtomParams()
    solved = gs.critical_pump_root_solver(atom, gs.CrossSectionKind.Extinction)
    assert solved == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-9)


def test_bloch_steady_state():
    r, _, _ = rates(gamma_nr=0.2, pump=1.8)
    ss = gs.steady_state(r)
    assert ss.rho_ee_inf == pytest.approx(0.6, rel=1e-12)
    assert ss.rho_gg_inf + ss.rho_ee_inf == 1.0

    state = gs.analytic_evolution(r, 0.0, 60.0 / r.big_gamma)
    assert state.rho_ee == pytest.approx(0.6, rel=1e-10)


def test_integrator_matches_closed_form():
    r, _, _ = rates(gamma_nr=0.2, pump=0.9)
    # small omega0 via a dedicated atom so the step guard stays cheap
    atom = gs.AtomParams()
    atom.omega0 = 2.0
    atom.omega_u = 6.0
    atom.gamma_nr = 0.2
    r = gs.derive_rates_at_pump(atom, gs.DriveParams(), 0.9)
    init = gs.BlochState()
    init.rho_ee = 0.3
    init.rho_gg = 0.7
    init.rho_eg = math.sqrt(0.3 - 0.09)
    got = gs.integrate_bloch(r, init, 4.0, 1e-3)
    want = gs.analytic_evolution(r, 0.3, 4.0)
    assert got.rho_ee == pytest.approx(want.rho_ee, abs=1e-9)
    assert abs(got.rho_eg - want.rho_eg) < 1e-9


def test_semiclassical_factor():
    r, _, drive = rates(gamma_nr=0.2, pump=1.0, detuning=0.4)
    drive.detuning = 0.4
    imbalance = (r.pump_rate - r.gamma) / r.big_gamma
    ratio = gs.coherent_power(r, drive) / gs.scattered_power(r, drive)
    assert ratio == pytest.approx(imbalance**2, rel=1e-12)
    assert gs.polarizability(rates(pump=1.0)[0]) == 0.0  # P = gamma


def test_unitarity_residual():
    r, _, drive = rates(gamma_nr=0.2, pump=1.8)
    assert gs.unitarity_residual(r, drive) == 0.0


def test_quadrature_oracle():
    r, _, drive = rates(gamma_nr=0.2)
    spec = gs.QuadratureSpec.steady(r)
    got = gs.quad_absorption_w3(r, drive, spec)
    lor = r.detuning**2 + 0.25 * r.big_gamma**2
    want = drive.rabi_probe**2 * r.gamma / (4.0 * lor * r.gamma0)
    assert got == pytest.approx(want, rel=1e-3)


def test_green_function():
    assert gs.im_green_coincident(1.0) == pytest.approx(-1.0 / (6 * math.pi))
    g = gs.green_dyadic([0.0, 0.0, 1.0], 1.0)
    assert g[0][1] == 0.0
    assert g[0][0] == g[1][1]
