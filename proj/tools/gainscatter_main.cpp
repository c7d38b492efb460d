// Command-line front end: parameter sweeps, trajectories, balance and
// quadrature reports as CSV/JSON.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gainscatter/sweep.hpp"

namespace {

using namespace gainscatter;

struct CommonOptions {
    std::string config_path;
    std::optional<double> omega0, omega_u, gamma0, gamma_nr, gamma_u;
    std::optional<double> detuning, rabi_probe, rabi_pump, pump_rate;
    std::optional<std::string> mode;
    std::optional<double> sweep_min, sweep_max;
    std::optional<int> sweep_points;
    std::optional<std::string> sweep_variable;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file");
    cmd->add_option("--omega0", opt.omega0, "g->e transition frequency [gamma0]");
    cmd->add_option("--omega-u", opt.omega_u, "e->u interval [gamma0]");
    cmd->add_option("--gamma0", opt.gamma0, "radiative linewidth (unit of all rates)");
    cmd->add_option("--gamma-nr", opt.gamma_nr, "nonradiative decay rate [gamma0]");
    cmd->add_option("--gamma-u", opt.gamma_u, "upper-state linewidth [gamma0]");
    cmd->add_option("--detuning", opt.detuning, "probe detuning [gamma0]");
    cmd->add_option("--rabi-probe", opt.rabi_probe, "probe Rabi frequency [gamma0]");
    cmd->add_option("--rabi-pump", opt.rabi_pump, "pump Rabi frequency [gamma0]");
    cmd->add_option("--pump-rate", opt.pump_rate,
                    "pump rate P [gamma0]; alternative to --rabi-pump");
    cmd->add_option("--mode", opt.mode, "gamma_omega mode: flat|cubic_free_space");
    cmd->add_option("--sweep-min", opt.sweep_min, "sweep lower bound");
    cmd->add_option("--sweep-max", opt.sweep_max, "sweep upper bound");
    cmd->add_option("--sweep-points", opt.sweep_points, "sweep grid points (>= 2)");
    cmd->add_option("--sweep-variable", opt.sweep_variable, "detuning|pump");
    cmd->add_option("--out", opt.out_path, "output path ('-' = stdout)");
    cmd->add_option("--format", opt.format, "csv|json");
}

RunConfig build_config(const CommonOptions& opt) {
    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = load_config_file(opt.config_path);

    if (opt.omega0) cfg.atom.omega0 = *opt.omega0;
    if (opt.omega_u) cfg.atom.omega_u = *opt.omega_u;
    if (opt.gamma0) cfg.atom.gamma0 = *opt.gamma0;
    if (opt.gamma_nr) cfg.atom.gamma_nr = *opt.gamma_nr;
    if (opt.gamma_u) cfg.atom.gamma_u = *opt.gamma_u;
    if (opt.detuning) cfg.drive.detuning = *opt.detuning;
    if (opt.rabi_probe) cfg.drive.rabi_probe = *opt.rabi_probe;
    if (opt.rabi_pump && opt.pump_rate)
        throw std::invalid_argument("give either --pump-rate or --rabi-pump, not both");
    if (opt.rabi_pump) cfg.drive.rabi_pump = *opt.rabi_pump;
    if (opt.pump_rate) {
        if (*opt.pump_rate < 0.0) throw std::invalid_argument("pump rate must be >= 0");
        cfg.drive.rabi_pump = std::sqrt(*opt.pump_rate * cfg.atom.gamma_u);
    }
    if (opt.mode) {
        if (*opt.mode == "flat") cfg.mode = GammaOmegaMode::Flat;
        else if (*opt.mode == "cubic_free_space" || *opt.mode == "cubic")
            cfg.mode = GammaOmegaMode::CubicFreeSpace;
        else throw std::invalid_argument("--mode must be flat or cubic_free_space");
    }
    if (opt.sweep_variable) {
        if (*opt.sweep_variable == "detuning") cfg.sweep.variable = SweepVariable::Detuning;
        else if (*opt.sweep_variable == "pump") cfg.sweep.variable = SweepVariable::Pump;
        else throw std::invalid_argument("--sweep-variable must be detuning or pump");
    }
    if (opt.sweep_min) cfg.sweep.min = *opt.sweep_min;
    if (opt.sweep_max) cfg.sweep.max = *opt.sweep_max;
    if (opt.sweep_points) cfg.sweep.n_points = *opt.sweep_points;
    if (opt.out_path) cfg.output.path = *opt.out_path;
    if (opt.format) {
        if (*opt.format == "csv") cfg.output.format = OutputFormat::Csv;
        else if (*opt.format == "json") cfg.output.format = OutputFormat::Json;
        else throw std::invalid_argument("--format must be csv or json");
    }
    cfg.validate();
    return cfg;
}

void warn_regimes(const RunConfig& cfg) {
    const DerivedRates rates = derive_rates(cfg.atom, cfg.drive, cfg.mode);
    if (!rates.incoherent_pump_ok)
        std::cerr << "warning: gamma_u/gamma0 below the incoherent-pump threshold\n";
    if (!rates.weak_probe_ok)
        std::cerr << "warning: rabi_probe above the weak-probe threshold\n";
}

int emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.output.path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << cfg.output.path << "'\n";
        return 1;
    }
    out << text;
    return out.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state optical response of an incoherently pumped atom"};
    app.require_subcommand(1);

    CommonOptions opt;
    BlochRunOptions bloch_opt;
    std::string bloch_method = "analytic";
    std::optional<double> bloch_dt;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Cross-sections and powers over a detuning sweep");
    add_common_options(spectrum, opt);

    CLI::App* pumpsweep = app.add_subcommand(
        "pumpsweep", "Resonant cross-sections over a pump-rate sweep");
    add_common_options(pumpsweep, opt);

    CLI::App* bloch_cmd = app.add_subcommand("bloch", "Two-level relaxation trajectory");
    add_common_options(bloch_cmd, opt);
    bloch_cmd->add_option("--ne", bloch_opt.initial_excited,
                          "initial excited population in [0, 1]");
    bloch_cmd->add_option("--t-end", bloch_opt.t_end, "trajectory length [1/gamma0]");
    bloch_cmd->add_option("--dt", bloch_dt, "integrator step [1/gamma0]");
    bloch_cmd->add_option("--stride", bloch_opt.stride, "emit every stride-th step");
    bloch_cmd->add_option("--method", bloch_method, "analytic|rk4");

    CLI::App* balance = app.add_subcommand(
        "balance", "Critical pump rates and the unitarity residual (JSON)");
    add_common_options(balance, opt);

    CLI::App* compare = app.add_subcommand(
        "compare", "Quantum scattered power vs semiclassical coherent power");
    add_common_options(compare, opt);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Quadrature cross-checks of the closed forms (JSON)");
    add_common_options(oracle, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = build_config(opt);

        if (spectrum->parsed()) {
            warn_regimes(cfg);
            const auto rows = spectrum_rows(cfg);
            return emit(cfg, cfg.output.format == OutputFormat::Csv
                                 ? spectrum_csv(cfg, rows)
                                 : spectrum_json(cfg, rows));
        }
        if (pumpsweep->parsed()) {
            cfg.sweep.variable = SweepVariable::Pump;
            warn_regimes(cfg);
            const auto result = pumpsweep_rows(cfg);
            return emit(cfg, cfg.output.format == OutputFormat::Csv
                                 ? pumpsweep_csv(cfg, result)
                                 : pumpsweep_json(cfg, result));
        }
        if (bloch_cmd->parsed()) {
            bloch_opt.dt = bloch_dt;
            bloch_opt.use_integrator = bloch_method == "rk4";
            if (!bloch_opt.use_integrator && bloch_method != "analytic")
                throw std::invalid_argument("--method must be analytic or rk4");
            const auto samples = bloch_trajectory(cfg, bloch_opt);
            return emit(cfg, cfg.output.format == OutputFormat::Csv
                                 ? bloch_csv(cfg, samples)
                                 : bloch_json(cfg, samples));
        }
        if (balance->parsed()) {
            const auto report = balance_report(cfg);
            return emit(cfg, balance_json(cfg, report));
        }
        if (compare->parsed()) {
            warn_regimes(cfg);
            const auto rows = compare_rows(cfg);
            return emit(cfg, cfg.output.format == OutputFormat::Csv
                                 ? compare_csv(cfg, rows)
                                 : compare_json(cfg, rows));
        }
        if (oracle->parsed()) {
            const auto report = run_oracle_suite(cfg.atom, cfg.drive, cfg.mode);
            const int rc = emit(cfg, oracle_json(cfg, report));
            if (rc != 0) return rc;
            for (const OracleResult& r : report)
                if (!r.pass) return 2;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
