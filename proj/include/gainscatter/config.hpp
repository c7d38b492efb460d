#pragma once

#include <optional>
#include <string>

#include "gainscatter/params.hpp"

namespace gainscatter {

enum class SweepVariable { Detuning, Pump };
enum class OutputFormat { Csv, Json };

// Sweep bounds are optional so each subcommand can pick sensible defaults
// per variable: detuning in [-4, 4] with 161 points, pump in [0, 4] with 81.
struct SweepSpec {
    SweepVariable variable = SweepVariable::Detuning;
    std::optional<double> min;
    std::optional<double> max;
    std::optional<int> n_points;
};

struct ResolvedSweep {
    SweepVariable variable = SweepVariable::Detuning;
    double min = 0.0;
    double max = 0.0;
    int n_points = 0;
};

struct OutputSpec {
    std::string path = "-";  // "-" writes to stdout
    OutputFormat format = OutputFormat::Csv;
};

// Flat key-value run configuration; maps one-to-one onto the atom and drive
// fields plus sweep/output plumbing. `pump_rate` is accepted on input as an
// alternative to `rabi_pump` (they must not both be given) and is folded
// into rabi_pump = sqrt(pump_rate * gamma_u) immediately.
struct RunConfig {
    AtomParams atom{};
    DriveParams drive{};
    GammaOmegaMode mode = GammaOmegaMode::Flat;
    SweepSpec sweep{};
    OutputSpec output{};

    ResolvedSweep resolved_sweep() const;
    void validate() const;
};

// Strict parser: unknown keys are rejected.
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// Canonical serialization (sorted keys, resolved sweep bounds, rabi_pump
// only). parse(serialize(x)) == serialize-identical, i.e. idempotent.
std::string serialize_config(const RunConfig& config);

std::string to_string(GammaOmegaMode mode);
std::string to_string(SweepVariable variable);
std::string to_string(OutputFormat format);

}  // namespace gainscatter
