#ifndef KKSPACE_CONFIG_HPP
#define KKSPACE_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "kkspace/experiments.hpp"

namespace kkspace {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

enum class OutputFormat { Csv, Structured };

// Fully resolved run configuration. Defaults reproduce the reference
// parameter set; a config file and then flag overrides are layered on top.
struct RunConfig {
    ExperimentParams params;
    ScanGrid grid;
    double delta_p = -50.0;       // single-detuning runs (profile, dkk)
    double control_ratio = 50.0;  // |delta_c/omega_c0| when built from delta0
    std::string out_path;         // empty -> stdout
    OutputFormat format = OutputFormat::Csv;

    // Raw control selection: either delta0 or (omega_c0, delta_c).
    bool control_from_delta0 = true;
    double delta0 = 100.0;

    // True once the user has set any delta_p axis key; subcommands with their
    // own default axis (map) only substitute it when untouched.
    bool delta_p_axis_touched = false;
};

RunConfig default_run_config();
RunConfig lattice_run_config(); // Bragg-lattice preset

// Applies one key=value pair. Throws ConfigError naming the key for unknown
// keys or unparseable/invalid values.
void apply_key_value(RunConfig &config, const std::string &key,
                     const std::string &value);

// Flat key=value text, '#' comments. Throws ConfigError / IoError.
void apply_config_text(RunConfig &config, const std::string &text);
void apply_config_file(RunConfig &config, const std::string &path);

// Serializes every schema key; parse(write(c)) resolves to an equivalent
// configuration.
std::string to_config_text(const RunConfig &config);

// Resolves the control field (from delta0 or explicit values) and refreshes
// derived state. Call after all overrides are applied.
void finalize(RunConfig &config);

inline constexpr int schema_version = 1;

} // namespace kkspace

#endif
