#pragma once

#include <iosfwd>
#include <string>

#include "ris/config.hpp"
#include "ris/synthesis.hpp"

namespace ris {

/// One synthesis pass at a single frequency: ideal profile, 1-bit
/// quantization, column collapse, then the configured optimizer.
struct SynthesisOutcome {
    PatternMask quantized;        // collapsed 1-bit starting mask
    PatternMask mask;             // optimizer output
    ColumnContributions contrib;  // per-column field contributions
};

SynthesisOutcome run_synthesis(const ScenarioConfig& cfg, double f_hz);

/// Subcommand bodies. Each writes its configured output files (stdout when
/// a path is empty), throws ConfigError/DomainError on bad inputs, and
/// returns the process exit code (0).
int cmd_synthesize(const ScenarioConfig& cfg, std::ostream& out);
int cmd_sweep(const ScenarioConfig& cfg, std::ostream& out);
int cmd_cut(const ScenarioConfig& cfg, std::ostream& out);
int cmd_link(const ScenarioConfig& cfg, std::ostream& out);

/// Encode a mask JSON file as a command frame: hex text to `out`, or raw
/// bytes to `device_path` when non-empty.
int cmd_encode(const std::string& mask_path, const std::string& device_path,
               std::ostream& out);

/// Fit the shunt-switch model to a measurement CSV (header
/// state,f_ghz,s21_db; ON rows are fitted, OFF rows are checked against
/// the model as loss upper bounds). Optional initial/output parameter
/// files use the key-value parameter format.
int cmd_switch_fit(const std::string& csv_path, const std::string& initial_path,
                   const std::string& params_out_path, std::ostream& out);

}  // namespace ris
