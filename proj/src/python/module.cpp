#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gainscatter/balance.hpp"
#include "gainscatter/bloch.hpp"
#include "gainscatter/greens.hpp"
#include "gainscatter/oracle.hpp"
#include "gainscatter/response.hpp"
#include "gainscatter/semiclassical.hpp"

namespace py = pybind11;
using namespace gainscatter;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Steady-state optical response of an incoherently pumped atom";
    m.attr("__version__") = "0.1.0";

    py::enum_<GammaOmegaMode>(m, "GammaOmegaMode")
        .value("Flat", GammaOmegaMode::Flat)
        .value("CubicFreeSpace", GammaOmegaMode::CubicFreeSpace);

    py::class_<AtomParams>(m, "AtomParams")
        .def(py::init<>())
        .def_readwrite("omega0", &AtomParams::omega0)
        .def_readwrite("omega_u", &AtomParams::omega_u)
        .def_readwrite("gamma0", &AtomParams::gamma0)
        .def_readwrite("gamma_nr", &AtomParams::gamma_nr)
        .def_readwrite("gamma_u", &AtomParams::gamma_u)
        .def("mu_parallel_sq", &AtomParams::mu_parallel_sq)
        .def("validate", &AtomParams::validate);

    py::class_<DriveParams>(m, "DriveParams")
        .def(py::init<>())
        .def_readwrite("detuning", &DriveParams::detuning)
        .def_readwrite("rabi_probe", &DriveParams::rabi_probe)
        .def_readwrite("rabi_pump", &DriveParams::rabi_pump)
        .def("validate", &DriveParams::validate);

    py::class_<RegimeThresholds>(m, "RegimeThresholds")
        .def(py::init<>())
        .def_readwrite("pump_adiabatic_ratio", &RegimeThresholds::pump_adiabatic_ratio)
        .def_readwrite("weak_probe_ratio", &RegimeThresholds::weak_probe_ratio);

    py::class_<DerivedRates>(m, "DerivedRates")
        .def_readonly("pump_rate", &DerivedRates::pump_rate)
        .def_readonly("gamma", &DerivedRates::gamma)
        .def_readonly("big_gamma", &DerivedRates::big_gamma)
        .def_readonly("gamma_omega", &DerivedRates::gamma_omega)
        .def_readonly("gamma0", &DerivedRates::gamma0)
        .def_readonly("gamma_nr", &DerivedRates::gamma_nr)
        .def_readonly("omega0", &DerivedRates::omega0)
        .def_readonly("omega_probe", &DerivedRates::omega_probe)
        .def_readonly("detuning", &DerivedRates::detuning)
        .def_readonly("omega_factor", &DerivedRates::omega_factor)
        .def_readonly("incoherent_pump_ok", &DerivedRates::incoherent_pump_ok)
        .def_readonly("weak_probe_ok", &DerivedRates::weak_probe_ok);

    m.def("derive_rates", &derive_rates, py::arg("atom"), py::arg("drive"),
          py::arg("mode") = GammaOmegaMode::Flat,
          py::arg("thresholds") = RegimeThresholds{});
    m.def("derive_rates_at_pump", &derive_rates_at_pump, py::arg("atom"),
          py::arg("drive"), py::arg("pump_rate"),
          py::arg("mode") = GammaOmegaMode::Flat,
          py::arg("thresholds") = RegimeThresholds{});

    m.def("im_green_coincident", &im_green_coincident, py::arg("omega"));
    m.def("decay_rate", &decay_rate, py::arg("omega"), py::arg("dipole_sq"));
    m.def(
        "green_dyadic",
        [](const Vec3& displacement, double omega) {
            const GreenTensor g = green_dyadic(displacement, omega);
            std::array<std::array<std::complex<double>, 3>, 3> out;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) out[i][j] = g(i, j);
            return out;
        },
        py::arg("displacement"), py::arg("omega"));

    py::class_<BlochState>(m, "BlochState")
        .def(py::init<>())
        .def_readwrite("rho_gg", &BlochState::rho_gg)
        .def_readwrite("rho_ee", &BlochState::rho_ee)
        .def_readwrite("rho_eg", &BlochState::rho_eg);

    py::class_<SteadyState>(m, "SteadyState")
        .def_readonly("rho_gg_inf", &SteadyState::rho_gg_inf)
        .def_readonly("rho_ee_inf", &SteadyState::rho_ee_inf)
        .def_readonly("weight_g", &SteadyState::weight_g)
        .def_readonly("weight_e", &SteadyState::weight_e);

    m.def("analytic_evolution", &analytic_evolution, py::arg("rates"),
          py::arg("initial_excited"), py::arg("t"));
    m.def("steady_state", &steady_state, py::arg("rates"));
    m.def(
        "integrate_bloch",
        [](const DerivedRates& rates, const BlochState& initial, double t_end,
           double dt) { return integrate_bloch(rates, initial, t_end, dt); },
        py::arg("rates"), py::arg("initial"), py::arg("t_end"), py::arg("dt"));

    py::class_<ResponsePoint>(m, "ResponsePoint")
        .def_readonly("detuning", &ResponsePoint::detuning)
        .def_readonly("sigma_sc", &ResponsePoint::sigma_sc)
        .def_readonly("sigma_abs", &ResponsePoint::sigma_abs)
        .def_readonly("sigma_ext", &ResponsePoint::sigma_ext)
        .def_readonly("w_sc", &ResponsePoint::w_sc)
        .def_readonly("w_abs", &ResponsePoint::w_abs)
        .def_readonly("w_inc", &ResponsePoint::w_inc);

    m.def("scattered_power", &scattered_power);
    m.def("scattering_cross_section", &scattering_cross_section);
    m.def("absorbed_power", &absorbed_power);
    m.def("absorption_cross_section", &absorption_cross_section);
    m.def("extinction_cross_section", &extinction_cross_section);
    m.def("incoherent_power", &incoherent_power);
    m.def("incoherent_power_resonant", &incoherent_power_resonant);
    m.def("evaluate_point", &evaluate_point);

    py::class_<CriticalPumps>(m, "CriticalPumps")
        .def_readonly("p_abs_zero", &CriticalPumps::p_abs_zero)
        .def_readonly("p_ext_zero", &CriticalPumps::p_ext_zero);

    py::enum_<CrossSectionKind>(m, "CrossSectionKind")
        .value("Absorption", CrossSectionKind::Absorption)
        .value("Extinction", CrossSectionKind::Extinction);

    m.def("critical_pumps_closed_form", &critical_pumps_closed_form,
          py::arg("gamma_nr"), py::arg("gamma_omega"));
    m.def("critical_pump_root_solver", &critical_pump_root_solver, py::arg("atom"),
          py::arg("kind"), py::arg("pump_max") = 1.0e3);

    py::class_<UnitarityBudget>(m, "UnitarityBudget")
        .def_readonly("outflow_rate", &UnitarityBudget::outflow_rate)
        .def_readonly("renormalization_rate", &UnitarityBudget::renormalization_rate)
        .def_readonly("residual", &UnitarityBudget::residual);

    m.def("unitarity_budget", &unitarity_budget);
    m.def("unitarity_residual", &unitarity_residual);

    m.def("polarizability",
          [](const DerivedRates& rates) { return polarizability(rates).value; });
    m.def("dipole_expectation", &dipole_expectation, py::arg("rates"),
          py::arg("drive"), py::arg("t"));
    m.def("coherent_power", &coherent_power);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("t_end", &QuadratureSpec::t_end)
        .def_readwrite("n_time", &QuadratureSpec::n_time)
        .def_readwrite("freq_window", &QuadratureSpec::freq_window)
        .def_readwrite("n_freq", &QuadratureSpec::n_freq)
        .def_static("steady", &QuadratureSpec::steady)
        .def_static("golden_rule", &QuadratureSpec::golden_rule);

    py::class_<ScatteringQuadrature>(m, "ScatteringQuadrature")
        .def_readonly("w_ground", &ScatteringQuadrature::w_ground)
        .def_readonly("w_excited", &ScatteringQuadrature::w_excited)
        .def_readonly("total", &ScatteringQuadrature::total);

    m.def("quad_absorption_w3", &quad_absorption_w3);
    m.def("quad_stimulated_w4", &quad_stimulated_w4);
    m.def("quad_scattering", &quad_scattering);
    m.def("quad_gamma0", &quad_gamma0, py::arg("rates"), py::arg("spec"),
          py::arg("dipole_sq_scale") = 1.0);
    m.def("quad_spontaneous_w5", &quad_spontaneous_w5);
    m.def("emission_line_density", &emission_line_density);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("target", &OracleResult::target)
        .def_readonly("closed_form", &OracleResult::closed_form)
        .def_readonly("quadrature", &OracleResult::quadrature)
        .def_readonly("rel_error", &OracleResult::rel_error)
        .def_readonly("tolerance", &OracleResult::tolerance)
        .def_readonly("pass_", &OracleResult::pass);

    m.def("run_oracle_suite", &run_oracle_suite, py::arg("atom"), py::arg("drive"),
          py::arg("mode") = GammaOmegaMode::Flat);
}
