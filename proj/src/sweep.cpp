#include "gainscatter/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gainscatter/semiclassical.hpp"
#include "parallel_for.hpp"

namespace gainscatter {

using nlohmann::json;

namespace {

double grid_point(double lo, double hi, int n, int i) {
    if (i == 0) return lo;
    if (i == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// '#'-prefixed echo of the full config, one sorted key per line.
void write_metadata(std::ostringstream& out, const RunConfig& config,
                    const char* kind) {
    out << "# gainscatter " << kind << "\n";
    const json j = json::parse(serialize_config(config));
    for (const auto& [key, value] : j.items()) {
        out << "# " << key << " = "
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

json config_echo(const RunConfig& config) {
    return json::parse(serialize_config(config));
}

}  // namespace

std::vector<ResponsePoint> spectrum_rows(const RunConfig& config) {
    config.validate();
    const ResolvedSweep sweep = config.resolved_sweep();
    if (sweep.variable != SweepVariable::Detuning)
        throw std::invalid_argument("spectrum requires a detuning sweep");

    std::vector<ResponsePoint> rows(sweep.n_points);
    detail::parallel_for(rows.size(), [&](std::size_t i) {
        DriveParams d = config.drive;
        d.detuning = grid_point(sweep.min, sweep.max, sweep.n_points, static_cast<int>(i));
        const DerivedRates r = derive_rates(config.atom, d, config.mode);
        rows[i] = evaluate_point(r, d);
    });
    return rows;
}

PumpSweepResult pumpsweep_rows(const RunConfig& config) {
    config.validate();
    const ResolvedSweep sweep = config.resolved_sweep();
    if (sweep.variable != SweepVariable::Pump)
        throw std::invalid_argument("pumpsweep requires a pump sweep");

    PumpSweepResult out;
    out.rows.resize(sweep.n_points);
    detail::parallel_for(out.rows.size(), [&](std::size_t i) {
        const double pump = grid_point(sweep.min, sweep.max, sweep.n_points,
                                       static_cast<int>(i));
        const DerivedRates r =
            derive_rates_at_pump(config.atom, config.drive, pump, config.mode);
        PumpSweepRow& row = out.rows[i];
        row.pump_rate = pump;
        row.sigma_sc = scattering_cross_section(r);
        row.sigma_abs = absorption_cross_section(r);
        row.sigma_ext = extinction_cross_section(r);
    });
    out.critical = critical_pumps_closed_form(config.atom.gamma_nr, config.atom.gamma0);
    return out;
}

std::vector<BlochSample> bloch_trajectory(const RunConfig& config,
                                          const BlochRunOptions& options) {
    config.validate();
    if (options.initial_excited < 0.0 || options.initial_excited > 1.0)
        throw std::invalid_argument("initial excited population must lie in [0, 1]");
    if (!(options.t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (options.stride < 1) throw std::invalid_argument("stride must be >= 1");

    const DerivedRates rates = derive_rates(config.atom, config.drive, config.mode);
    std::vector<BlochSample> samples;

    if (options.use_integrator) {
        const double dt = options.dt.value_or(
            std::min(0.009 / rates.big_gamma, 0.4 / rates.omega0));
        BlochState initial;
        initial.rho_ee = options.initial_excited;
        initial.rho_gg = 1.0 - options.initial_excited;
        const double c0 = std::sqrt(std::max(
            0.0, options.initial_excited - options.initial_excited * options.initial_excited));
        initial.rho_eg = c0;
        long step = 0;
        integrate_bloch(rates, initial, options.t_end, dt,
                        [&](double t, const BlochState& s) {
                            if (step % options.stride == 0) samples.push_back({t, s});
                            ++step;
                        });
    } else {
        const int n = 1001;
        samples.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double t = grid_point(0.0, options.t_end, n, i);
            samples.push_back({t, analytic_evolution(rates, options.initial_excited, t)});
        }
    }
    return samples;
}

BalanceReport balance_report(const RunConfig& config) {
    config.validate();
    BalanceReport report;
    report.closed_form =
        critical_pumps_closed_form(config.atom.gamma_nr, config.atom.gamma0);

    const auto solve = [&](CrossSectionKind kind) -> std::optional<double> {
        try {
            return critical_pump_root_solver(config.atom, kind);
        } catch (const std::runtime_error&) {
            return std::nullopt;  // no sign change in the bracket
        }
    };
    report.p_abs_zero_solver = solve(CrossSectionKind::Absorption);
    report.p_ext_zero_solver = solve(CrossSectionKind::Extinction);

    DriveParams resonant = config.drive;
    resonant.detuning = 0.0;
    const DerivedRates rates = derive_rates(config.atom, resonant, config.mode);
    report.unitarity_residual_at_resonance = unitarity_residual(rates, resonant);
    return report;
}

std::vector<CompareRow> compare_rows(const RunConfig& config) {
    config.validate();
    const ResolvedSweep sweep = config.resolved_sweep();
    if (sweep.variable != SweepVariable::Detuning)
        throw std::invalid_argument("compare requires a detuning sweep");

    std::vector<CompareRow> rows(sweep.n_points);
    detail::parallel_for(rows.size(), [&](std::size_t i) {
        DriveParams d = config.drive;
        d.detuning = grid_point(sweep.min, sweep.max, sweep.n_points, static_cast<int>(i));
        const DerivedRates r = derive_rates(config.atom, d, config.mode);
        CompareRow& row = rows[i];
        row.detuning = d.detuning;
        row.w_sc = scattered_power(r, d);
        row.w_coh = coherent_power(r, d);
        row.ratio = row.w_sc == 0.0 ? 0.0 : row.w_coh / row.w_sc;
    });
    return rows;
}

std::string spectrum_csv(const RunConfig& config, const std::vector<ResponsePoint>& rows) {
    std::ostringstream out;
    write_metadata(out, config, "spectrum");
    out << "detuning_over_gamma0,sigma_sc,sigma_abs,sigma_ext,w_sc,w_abs,w_inc\n";
    for (const ResponsePoint& p : rows) {
        out << fmt(p.detuning) << ',' << fmt(p.sigma_sc) << ',' << fmt(p.sigma_abs)
            << ',' << fmt(p.sigma_ext) << ',' << fmt(p.w_sc) << ',' << fmt(p.w_abs)
            << ',' << fmt(p.w_inc) << "\n";
    }
    return out.str();
}

std::string spectrum_json(const RunConfig& config, const std::vector<ResponsePoint>& rows) {
    json j;
    j["config"] = config_echo(config);
    json arr = json::array();
    for (const ResponsePoint& p : rows) {
        arr.push_back({{"detuning_over_gamma0", p.detuning},
                       {"sigma_sc", p.sigma_sc},
                       {"sigma_abs", p.sigma_abs},
                       {"sigma_ext", p.sigma_ext},
                       {"w_sc", p.w_sc},
                       {"w_abs", p.w_abs},
                       {"w_inc", p.w_inc}});
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string pumpsweep_csv(const RunConfig& config, const PumpSweepResult& result) {
    std::ostringstream out;
    write_metadata(out, config, "pumpsweep");
    out << "P_over_gamma0,sigma_sc,sigma_abs,sigma_ext\n";
    for (const PumpSweepRow& row : result.rows) {
        out << fmt(row.pump_rate) << ',' << fmt(row.sigma_sc) << ','
            << fmt(row.sigma_abs) << ',' << fmt(row.sigma_ext) << "\n";
    }
    json footer;
    footer["p_abs_zero"] = result.critical.p_abs_zero;
    footer["p_ext_zero"] = result.critical.p_ext_zero;
    out << "# " << footer.dump() << "\n";
    return out.str();
}

std::string pumpsweep_json(const RunConfig& config, const PumpSweepResult& result) {
    json j;
    j["config"] = config_echo(config);
    json arr = json::array();
    for (const PumpSweepRow& row : result.rows) {
        arr.push_back({{"P_over_gamma0", row.pump_rate},
                       {"sigma_sc", row.sigma_sc},
                       {"sigma_abs", row.sigma_abs},
                       {"sigma_ext", row.sigma_ext}});
    }
    j["rows"] = std::move(arr);
    j["critical_pumps"] = {{"p_abs_zero", result.critical.p_abs_zero},
                           {"p_ext_zero", result.critical.p_ext_zero}};
    return j.dump(2) + "\n";
}

std::string bloch_csv(const RunConfig& config, const std::vector<BlochSample>& samples) {
    std::ostringstream out;
    write_metadata(out, config, "bloch");
    out << "time,rho_gg,rho_ee,re_rho_eg,im_rho_eg\n";
    for (const BlochSample& s : samples) {
        out << fmt(s.t) << ',' << fmt(s.state.rho_gg) << ',' << fmt(s.state.rho_ee)
            << ',' << fmt(s.state.rho_eg.real()) << ',' << fmt(s.state.rho_eg.imag())
            << "\n";
    }
    return out.str();
}

std::string bloch_json(const RunConfig& config, const std::vector<BlochSample>& samples) {
    json j;
    j["config"] = config_echo(config);
    json arr = json::array();
    for (const BlochSample& s : samples) {
        arr.push_back({{"time", s.t},
                       {"rho_gg", s.state.rho_gg},
                       {"rho_ee", s.state.rho_ee},
                       {"re_rho_eg", s.state.rho_eg.real()},
                       {"im_rho_eg", s.state.rho_eg.imag()}});
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string balance_json(const RunConfig& config, const BalanceReport& report) {
    json j;
    j["config"] = config_echo(config);
    j["p_abs_zero"] = report.closed_form.p_abs_zero;
    j["p_ext_zero"] = report.closed_form.p_ext_zero;
    j["p_abs_zero_solver"] =
        report.p_abs_zero_solver ? json(*report.p_abs_zero_solver) : json(nullptr);
    j["p_ext_zero_solver"] =
        report.p_ext_zero_solver ? json(*report.p_ext_zero_solver) : json(nullptr);
    j["unitarity_residual_at_resonance"] = report.unitarity_residual_at_resonance;
    return j.dump(2) + "\n";
}

std::string compare_csv(const RunConfig& config, const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    write_metadata(out, config, "compare");
    out << "detuning_over_gamma0,w_sc,w_coh,ratio\n";
    for (const CompareRow& row : rows) {
        out << fmt(row.detuning) << ',' << fmt(row.w_sc) << ',' << fmt(row.w_coh)
            << ',' << fmt(row.ratio) << "\n";
    }
    return out.str();
}

std::string compare_json(const RunConfig& config, const std::vector<CompareRow>& rows) {
    json j;
    j["config"] = config_echo(config);
    json arr = json::array();
    for (const CompareRow& row : rows) {
        arr.push_back({{"detuning_over_gamma0", row.detuning},
                       {"w_sc", row.w_sc},
                       {"w_coh", row.w_coh},
                       {"ratio", row.ratio}});
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string oracle_json(const RunConfig& config, const std::vector<OracleResult>& report) {
    json j;
    j["config"] = config_echo(config);
    json arr = json::array();
    bool all_pass = true;
    for (const OracleResult& r : report) {
        arr.push_back({{"target", r.target},
                       {"closed_form", r.closed_form},
                       {"quadrature", r.quadrature},
                       {"rel_error", r.rel_error},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
        all_pass = all_pass && r.pass;
    }
    j["targets"] = std::move(arr);
    j["all_pass"] = all_pass;
    return j.dump(2) + "\n";
}

}  // namespace gainscatter
