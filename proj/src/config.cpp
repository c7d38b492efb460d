#include "gainscatter/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gainscatter {

using nlohmann::json;

ResolvedSweep RunConfig::resolved_sweep() const {
    ResolvedSweep r;
    r.variable = sweep.variable;
    if (r.variable == SweepVariable::Detuning) {
        r.min = sweep.min.value_or(-4.0);
        r.max = sweep.max.value_or(4.0);
        r.n_points = sweep.n_points.value_or(161);
    } else {
        r.min = sweep.min.value_or(0.0);
        r.max = sweep.max.value_or(4.0);
        r.n_points = sweep.n_points.value_or(81);
    }
    return r;
}

void RunConfig::validate() const {
    atom.validate();
    drive.validate();
    const ResolvedSweep r = resolved_sweep();
    if (r.n_points < 2) throw std::invalid_argument("sweep_n_points must be >= 2");
    if (!(r.min < r.max)) throw std::invalid_argument("sweep_min must be < sweep_max");
    if (r.variable == SweepVariable::Pump && r.min < 0.0)
        throw std::invalid_argument("pump sweep bounds must be >= 0");
    if (output.format != OutputFormat::Csv && output.format != OutputFormat::Json)
        throw std::invalid_argument("output format must be csv or json");
}

std::string to_string(GammaOmegaMode mode) {
    return mode == GammaOmegaMode::Flat ? "flat" : "cubic_free_space";
}

std::string to_string(SweepVariable variable) {
    return variable == SweepVariable::Detuning ? "detuning" : "pump";
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

namespace {

GammaOmegaMode mode_from_string(const std::string& s) {
    if (s == "flat") return GammaOmegaMode::Flat;
    if (s == "cubic_free_space" || s == "cubic") return GammaOmegaMode::CubicFreeSpace;
    throw std::invalid_argument("gamma_omega_mode must be flat or cubic_free_space");
}

SweepVariable variable_from_string(const std::string& s) {
    if (s == "detuning") return SweepVariable::Detuning;
    if (s == "pump") return SweepVariable::Pump;
    throw std::invalid_argument("sweep_variable must be detuning or pump");
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("output_format must be csv or json");
}

double as_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw std::invalid_argument("config key '" + key + "' must be a number");
    return v.get<double>();
}

std::string as_string(const json& v, const std::string& key) {
    if (!v.is_string()) throw std::invalid_argument("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

RunConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    RunConfig cfg;
    bool saw_pump_rate = false;
    bool saw_rabi_pump = false;
    double pump_rate = 0.0;

    for (const auto& [key, value] : j.items()) {
        if (key == "omega0") cfg.atom.omega0 = as_number(value, key);
        else if (key == "omega_u") cfg.atom.omega_u = as_number(value, key);
        else if (key == "gamma0") cfg.atom.gamma0 = as_number(value, key);
        else if (key == "gamma_nr") cfg.atom.gamma_nr = as_number(value, key);
        else if (key == "gamma_u") cfg.atom.gamma_u = as_number(value, key);
        else if (key == "detuning") cfg.drive.detuning = as_number(value, key);
        else if (key == "rabi_probe") cfg.drive.rabi_probe = as_number(value, key);
        else if (key == "rabi_pump") {
            cfg.drive.rabi_pump = as_number(value, key);
            saw_rabi_pump = true;
        } else if (key == "pump_rate") {
            pump_rate = as_number(value, key);
            saw_pump_rate = true;
        } else if (key == "gamma_omega_mode") cfg.mode = mode_from_string(as_string(value, key));
        else if (key == "sweep_variable") cfg.sweep.variable = variable_from_string(as_string(value, key));
        else if (key == "sweep_min") cfg.sweep.min = as_number(value, key);
        else if (key == "sweep_max") cfg.sweep.max = as_number(value, key);
        else if (key == "sweep_n_points") {
            const double n = as_number(value, key);
            if (n != std::floor(n)) throw std::invalid_argument("sweep_n_points must be an integer");
            cfg.sweep.n_points = static_cast<int>(n);
        } else if (key == "output_path") cfg.output.path = as_string(value, key);
        else if (key == "output_format") cfg.output.format = format_from_string(as_string(value, key));
        else throw std::invalid_argument("unknown config key '" + key + "'");
    }

    if (saw_pump_rate && saw_rabi_pump)
        throw std::invalid_argument("give either pump_rate or rabi_pump, not both");
    if (saw_pump_rate) {
        if (pump_rate < 0.0) throw std::invalid_argument("pump_rate must be >= 0");
        cfg.drive.rabi_pump = std::sqrt(pump_rate * cfg.atom.gamma_u);
    }

    cfg.validate();
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const RunConfig& config) {
    const ResolvedSweep sweep = config.resolved_sweep();
    json j;
    j["omega0"] = config.atom.omega0;
    j["omega_u"] = config.atom.omega_u;
    j["gamma0"] = config.atom.gamma0;
    j["gamma_nr"] = config.atom.gamma_nr;
    j["gamma_u"] = config.atom.gamma_u;
    j["detuning"] = config.drive.detuning;
    j["rabi_probe"] = config.drive.rabi_probe;
    j["rabi_pump"] = config.drive.rabi_pump;
    j["gamma_omega_mode"] = to_string(config.mode);
    j["sweep_variable"] = to_string(sweep.variable);
    j["sweep_min"] = sweep.min;
    j["sweep_max"] = sweep.max;
    j["sweep_n_points"] = sweep.n_points;
    j["output_path"] = config.output.path;
    j["output_format"] = to_string(config.output.format);
    return j.dump(2);
}

}  // namespace gainscatter
