#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gainscatter/balance.hpp"
#include "gainscatter/bloch.hpp"
#include "gainscatter/config.hpp"
#include "gainscatter/oracle.hpp"
#include "gainscatter/response.hpp"

namespace gainscatter {

// Detuning sweep of every cross-section and power.
std::vector<ResponsePoint> spectrum_rows(const RunConfig& config);

struct PumpSweepRow {
    double pump_rate = 0.0;
    double sigma_sc = 0.0;
    double sigma_abs = 0.0;
    double sigma_ext = 0.0;
};

struct PumpSweepResult {
    std::vector<PumpSweepRow> rows;
    CriticalPumps critical;  // resonant closed forms, echoed in the footer
};

PumpSweepResult pumpsweep_rows(const RunConfig& config);

struct BlochSample {
    double t = 0.0;
    BlochState state;
};

struct BlochRunOptions {
    double initial_excited = 0.0;
    double t_end = 10.0;
    std::optional<double> dt;  // default resolves both Gamma and omega0
    int stride = 1;            // emit every stride-th step (integrator only)
    bool use_integrator = false;
};

std::vector<BlochSample> bloch_trajectory(const RunConfig& config,
                                          const BlochRunOptions& options);

struct BalanceReport {
    CriticalPumps closed_form;
    std::optional<double> p_abs_zero_solver;  // absent when no sign change
    std::optional<double> p_ext_zero_solver;
    double unitarity_residual_at_resonance = 0.0;
};

BalanceReport balance_report(const RunConfig& config);

struct CompareRow {
    double detuning = 0.0;
    double w_sc = 0.0;
    double w_coh = 0.0;
    double ratio = 0.0;
};

std::vector<CompareRow> compare_rows(const RunConfig& config);

// Writers. CSV carries a '#'-prefixed metadata block echoing the full
// config, so every output file is self-describing; identical configs give
// byte-identical bytes.
std::string spectrum_csv(const RunConfig& config, const std::vector<ResponsePoint>& rows);
std::string spectrum_json(const RunConfig& config, const std::vector<ResponsePoint>& rows);
std::string pumpsweep_csv(const RunConfig& config, const PumpSweepResult& result);
std::string pumpsweep_json(const RunConfig& config, const PumpSweepResult& result);
std::string bloch_csv(const RunConfig& config, const std::vector<BlochSample>& samples);
std::string bloch_json(const RunConfig& config, const std::vector<BlochSample>& samples);
std::string balance_json(const RunConfig& config, const BalanceReport& report);
std::string compare_csv(const RunConfig& config, const std::vector<CompareRow>& rows);
std::string compare_json(const RunConfig& config, const std::vector<CompareRow>& rows);
std::string oracle_json(const RunConfig& config, const std::vector<OracleResult>& report);

}  // namespace gainscatter
